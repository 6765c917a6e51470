// rfso - outage analysis for mixed RF/FSO relaying with partial relay selection
// Copyright (C) 2026 The rfso authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

// Random parameter points for the three G-function shapes used by the model:
// the irradiance density kernel, the CDF kernel and the outage-series kernel.

#include <cmath>
#include <random>
#include <string>

#include "rfso/meijer_g.hpp"

namespace rfso::test_support {

struct ShapeDraw {
    std::string shape;
    MeijerGSpec spec;
};

inline ShapeDraw draw_production_shape(int which, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double xi2 = 0.5 + 39.5 * u(rng);
    const double alpha = 1.5 + 28.5 * u(rng);
    const double k = std::floor(1.0 + 10.0 * u(rng));
    const double z = std::exp(std::log(0.01) + (std::log(5.0) - std::log(0.01)) * u(rng));
    switch (which % 3) {
    case 0:
        return {"G30_13", MeijerGSpec{3, 0, {xi2 + 1.0}, {xi2, alpha, k}, z}};
    case 1:
        return {"G31_24", MeijerGSpec{3, 1, {1.0, xi2 + 1.0}, {xi2, alpha, k, 0.0}, z}};
    default: {
        const int t = static_cast<int>(std::floor(21.0 * u(rng)));
        const int d = static_cast<int>(std::floor((t + 1.0) * u(rng)));
        return {"G62_37", MeijerGSpec{6, 2, {1.0, -double(t), 0.5 * (xi2 + 2.0)},
                                      {0.5 * xi2, 0.5 * alpha, 0.5 * (alpha + 1.0), 0.5 * k, 0.5 * (k + 1.0),
                                       1.0 + d, 0.0},
                                      z}};
    }
    }
}

} // namespace rfso::test_support
