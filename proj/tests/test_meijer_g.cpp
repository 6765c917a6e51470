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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "production_shapes.hpp"
#include "rfso/error.hpp"
#include "rfso/meijer_g.hpp"

using namespace rfso;

TEST(MeijerG, ExponentialIdentity) {
    for (double x : {0.01, 0.1, 1.0, 5.0, 20.0}) {
        const MeijerGSpec g{1, 0, {}, {0.0}, x};
        EXPECT_NEAR(meijer_g(g), std::exp(-x), 1e-12 * std::exp(-x)) << x;
    }
    EXPECT_NEAR(meijer_g({1, 0, {}, {0.0}, 1.0}), 0.36787944117144233, 1e-15);
}

TEST(MeijerG, ShiftedExponential) {
    // G^{1,0}_{0,1}(x | b) = x^b e^-x
    for (double b : {0.5, 2.0, 3.7}) {
        const double x = 1.7;
        const double ref = std::pow(x, b) * std::exp(-x);
        EXPECT_NEAR(meijer_g({1, 0, {}, {b}, x}), ref, 1e-12 * ref);
    }
}

TEST(MeijerG, RationalIdentities) {
    EXPECT_NEAR(meijer_g({1, 1, {1.0}, {1.0}, 1.0}), 0.5, 1e-12);
    for (double x : {0.05, 0.5, 3.0, 40.0}) {
        EXPECT_NEAR(meijer_g({1, 1, {1.0}, {1.0}, x}), x / (1.0 + x), 1e-12 * x / (1.0 + x)) << x;
        EXPECT_NEAR(meijer_g({1, 1, {0.0}, {0.0}, x}), 1.0 / (1.0 + x), 1e-12 / (1.0 + x)) << x;
    }
}

TEST(MeijerG, BesselKIdentity) {
    // G^{2,0}_{0,2}(x | a, b) = 2 x^((a+b)/2) K_{a-b}(2 sqrt x)
    const double a = 1.3, b = 0.4;
    for (double x : {0.2, 1.0, 6.0}) {
        const double ref = 2.0 * std::pow(x, 0.5 * (a + b)) * std::cyl_bessel_k(a - b, 2.0 * std::sqrt(x));
        EXPECT_NEAR(meijer_g({2, 0, {}, {a, b}, x}), ref, 1e-11 * ref) << x;
    }
    // integer order difference forces a double pole at every step
    for (double x : {0.3, 2.5}) {
        const double ref = 2.0 * std::pow(x, 1.0) * std::cyl_bessel_k(1.0, 2.0 * std::sqrt(x));
        EXPECT_NEAR(meijer_g({2, 0, {}, {1.5, 0.5}, x}), ref, 1e-11 * ref) << x;
    }
}

TEST(MeijerG, LargeArgumentUsesInversion) {
    // p > q shape: G^{1,1}_{1,1} has p == q; use G^{1,1}_{2,1}... via x/(1+x) in 1/x form
    const double x = 250.0;
    EXPECT_NEAR(meijer_g({1, 1, {1.0}, {1.0}, x}), x / (1.0 + x), 1e-12);
}

TEST(MeijerGContour, ClosedForms) {
    EXPECT_NEAR(meijer_g_contour({1, 0, {}, {0.0}, 2.0}), std::exp(-2.0), 1e-10);
    EXPECT_NEAR(meijer_g_contour({1, 1, {1.0}, {1.0}, 3.0}), 0.75, 1e-10);
}

TEST(MeijerG, CdfKernelAgreesWithContour) {
    const MeijerGSpec g{3, 1, {1.0, 2.3}, {1.3, 2.2, 1.0, 0.0}, 0.7};
    const double s = meijer_g(g, GStrategy::slater);
    const double c = meijer_g_contour(g);
    EXPECT_NEAR(s, c, 1e-8 * std::fabs(c));
}

TEST(MeijerG, CrossStrategyOnProductionShapes) {
    std::mt19937_64 rng(20240611);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        const auto d = test_support::draw_production_shape(i, rng);
        const double s = meijer_g(d.spec, GStrategy::slater);
        const double c = meijer_g_contour(d.spec);
        const double rel = std::fabs(s - c) / std::fabs(c);
        worst = std::max(worst, rel);
        EXPECT_LE(rel, 1e-8) << d.shape << " " << d.spec.describe();
    }
    RecordProperty("worst_relative_difference", std::to_string(worst));
}

TEST(MeijerG, AutomaticReportsErrorEstimate) {
    const MeijerGResult r = meijer_g_detailed({3, 0, {6.0}, {5.0, 10.0, 3.0}, 4.0});
    EXPECT_GT(r.value, 0.0);
    EXPECT_LE(r.abs_error, 1e-12 * r.value);
    EXPECT_GT(r.terms, 0);
}

TEST(MeijerG, LogPrefactorAvoidsOverflow) {
    // G^{1,0}_{0,1}(z | ; b) = z^b e^{-z} overflows on its own at b = 1100, z = 2
    const double b = 1100.0;
    const double lp = -760.0;
    const MeijerGResult r = meijer_g_detailed({1, 0, {}, {b}, 2.0}, GStrategy::slater, 0.0, lp);
    const double expected = std::exp(b * std::log(2.0) - 2.0 + lp);
    EXPECT_NEAR(r.value, expected, 1e-12 * expected);
}

TEST(MeijerG, InvalidSpecs) {
    EXPECT_THROW(meijer_g({1, 0, {}, {0.0}, -1.0}), std::invalid_argument);
    EXPECT_THROW(meijer_g({1, 0, {}, {0.0}, 0.0}), std::invalid_argument);
    EXPECT_THROW(meijer_g({2, 0, {}, {0.0}, 1.0}), std::invalid_argument);
    EXPECT_THROW(meijer_g({0, 0, {}, {0.0}, 1.0}, GStrategy::slater), EvaluationError);
}
