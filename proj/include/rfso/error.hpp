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

#include <cstdio>
#include <stdexcept>
#include <string>

namespace rfso {

/// Short scientific rendering for diagnostics.
inline std::string to_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

/// Raised when a numerical evaluation cannot deliver a trustworthy value
/// (series did not converge, quadrature budget exhausted, contour could not
/// be placed). `diagnostic()` carries the detail a caller would log.
class EvaluationError : public std::runtime_error {
public:
    explicit EvaluationError(const std::string& what, std::string diagnostic = {})
        : std::runtime_error(what), diagnostic_(std::move(diagnostic)) {}

    const std::string& diagnostic() const noexcept { return diagnostic_; }

private:
    std::string diagnostic_;
};

/// A truncated series whose tail could not be bounded below the acceptance
/// threshold. The partial sum is kept so callers can still report it.
class SeriesNotConverged : public EvaluationError {
public:
    SeriesNotConverged(const std::string& what, double partial, double tail_bound, int terms)
        : EvaluationError(what, "partial=" + to_sci(partial) +
                                    " tail_bound=" + to_sci(tail_bound) +
                                    " terms=" + std::to_string(terms)),
          partial_(partial), tail_bound_(tail_bound), terms_(terms) {}

    double partial_value() const noexcept { return partial_; }
    double tail_bound() const noexcept { return tail_bound_; }
    int terms() const noexcept { return terms_; }

private:
    double partial_;
    double tail_bound_;
    int terms_;
};

} // namespace rfso
