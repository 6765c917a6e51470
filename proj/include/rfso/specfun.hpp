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

// Scalar special functions shared by the channel and outage code. Real
// arguments go through the C library where it is accurate enough; the
// complex log-gamma and the generalized hypergeometric series are local.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>

#include <math.h>

#include "rfso/error.hpp"

namespace rfso {

/// Natural log of Γ(x) for x > 0.
inline double ln_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("ln_gamma: argument must be positive, got " + std::to_string(x));
    }
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

/// log|Γ(x)| and the sign of Γ(x) for any real x that is not a pole.
inline long double ln_abs_gamma(long double x, int& sign) {
    return ::lgammal_r(x, &sign);
}

inline double erf(double x) { return std::erf(x); }

/// ln C(n, k) for real n >= k >= 0.
inline double ln_binomial(double n, double k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// Exact small binomial coefficient as a double.
inline double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; ++i) {
        c = c * (n - k + i) / i;
    }
    return std::round(c);
}

namespace detail {

// e^{-x} I0(x) from the large-argument expansion; used for x >= 50 where the
// minimal term of the asymptotic series is far below double precision.
inline double bessel_i0_scaled_asymptotic(double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double f = (2.0 * k - 1.0);
        term *= f * f / (8.0 * x * k);
        sum += term;
        if (term < 1e-17 * sum) {
            break;
        }
    }
    return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

} // namespace detail

/// Modified Bessel function I0(x), x >= 0.
inline double bessel_i0(double x) {
    if (x < 0.0 || std::isnan(x)) {
        throw std::domain_error("bessel_i0: argument must be non-negative");
    }
    if (x < 700.0) {
        return std::cyl_bessel_i(0.0, x);
    }
    return std::exp(x) * detail::bessel_i0_scaled_asymptotic(x);
}

/// e^{-x} I0(x), finite for every x >= 0.
inline double bessel_i0_scaled(double x) {
    if (x < 0.0 || std::isnan(x)) {
        throw std::domain_error("bessel_i0_scaled: argument must be non-negative");
    }
    if (x < 50.0) {
        return std::exp(-x) * std::cyl_bessel_i(0.0, x);
    }
    return detail::bessel_i0_scaled_asymptotic(x);
}

namespace detail {

// log sin(pi w) for Im w >= 0, written so that large imaginary parts do not
// overflow: sin(pi w) = (i/2) e^{-i pi w} (1 - e^{2 i pi w}).
inline std::complex<double> log_sin_pi_upper(std::complex<double> w) {
    using namespace std::complex_literals;
    const double pi = std::numbers::pi;
    const std::complex<double> e2 = std::exp(2.0i * pi * w);
    return -1.0i * pi * w + std::complex<double>(std::log(0.5), 0.5 * pi) + std::log(1.0 - e2);
}

} // namespace detail

/// Complex log-gamma. Only exp() of the result is meaningful to callers: the
/// imaginary part is some branch of arg Γ(w), not necessarily the principal one.
inline std::complex<double> ln_gamma(std::complex<double> w) {
    const double pi = std::numbers::pi;
    if (w.real() < 0.5) {
        std::complex<double> ls;
        if (w.imag() >= 0.0) {
            ls = detail::log_sin_pi_upper(w);
        } else {
            ls = std::conj(detail::log_sin_pi_upper(std::conj(w)));
        }
        return std::log(pi) - ls - ln_gamma(1.0 - w);
    }
    std::complex<double> shift(1.0, 0.0);
    while (w.real() < 15.0) {
        shift *= w;
        w += 1.0;
    }
    // Stirling series, B_2k / (2k (2k-1)) for k = 1..8
    static constexpr double coef[] = {
        1.0 / 12.0,         -1.0 / 360.0,       1.0 / 1260.0,       -1.0 / 1680.0,
        1.0 / 1188.0,       -691.0 / 360360.0,  1.0 / 156.0,        -3617.0 / 122400.0};
    const std::complex<double> inv = 1.0 / w;
    const std::complex<double> inv2 = inv * inv;
    std::complex<double> series(0.0, 0.0);
    std::complex<double> p = inv;
    for (double c : coef) {
        series += c * p;
        p *= inv2;
    }
    return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi) + series - std::log(shift);
}

/// Generalized hypergeometric series pFq(a; b; z), summed term by term.
/// Stops once the last term's relative contribution drops below 1e-16
/// (after the terms have started to decrease); 10,000 terms is an error.
inline double hypergeometric_pfq(std::span<const double> a, std::span<const double> b, double z) {
    for (double bj : b) {
        if (bj <= 0.0 && bj == std::floor(bj)) {
            throw std::domain_error("hypergeometric_pfq: lower parameter is a non-positive integer");
        }
    }
    if (a.size() > b.size() + 1 || (a.size() == b.size() + 1 && std::fabs(z) >= 1.0)) {
        bool terminating = false;
        for (double aj : a) {
            terminating = terminating || (aj <= 0.0 && aj == std::floor(aj));
        }
        if (!terminating) {
            throw std::domain_error("hypergeometric_pfq: series diverges for this shape/argument");
        }
    }
    constexpr int kMaxTerms = 10000;
    long double term = 1.0L;
    long double sum = 1.0L;
    long double prev = 1.0L;
    int quiet = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        long double ratio = static_cast<long double>(z) / (n + 1);
        for (double aj : a) {
            ratio *= aj + n;
        }
        for (double bj : b) {
            ratio /= bj + n;
        }
        term *= ratio;
        sum += term;
        if (!std::isfinite(sum)) {
            throw EvaluationError("hypergeometric_pfq: partial sum overflowed", "z=" + std::to_string(z));
        }
        if (term == 0.0L) {
            return static_cast<double>(sum);
        }
        const long double mag = std::fabs(term);
        if (mag <= 1e-16L * std::fabs(sum) && mag <= prev) {
            if (++quiet >= 2) {
                return static_cast<double>(sum);
            }
        } else {
            quiet = 0;
        }
        prev = mag;
    }
    throw EvaluationError("hypergeometric_pfq: no convergence within 10000 terms",
                          "z=" + std::to_string(z));
}

} // namespace rfso
