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

// Channel parameterization: correlated Rayleigh RF hop under partial relay
// selection, and the Malaga turbulence FSO hop with pointing errors.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfso/error.hpp"
#include "rfso/meijer_g.hpp"
#include "rfso/specfun.hpp"

namespace rfso {

// ---------------------------------------------------------------------------
// RF hop

struct RfHopParams {
    double mu1 = 1000.0;  // linear average SNR
    double rho = 0.0;     // correlation between actual and estimated channel
    int M = 1;            // relay count
    int l = 1;            // selected rank, l-th worst

    void validate() const {
        if (!(mu1 > 0.0) || !std::isfinite(mu1)) throw std::invalid_argument("rf.mu1 must be positive");
        if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("rf.rho must lie in [0, 1]");
        if (M < 1) throw std::invalid_argument("rf.M must be at least 1");
        if (l < 1 || l > M) throw std::invalid_argument("rf.l must lie in [1, M]");
    }

    double psi(int i) const { return (M - l + i) * (1.0 - rho) + 1.0; }
};

// ---------------------------------------------------------------------------
// Malaga turbulence

struct MalagaParams {
    double alpha = 10.0;
    double beta = 5.0;  // must be a positive integer
    double b0 = 0.25;
    double Omega = 0.5;
    double rho_M = 1.0;
    double phi_AB = std::numbers::pi / 2.0;

    int beta_int() const {
        const double r = std::round(beta);
        if (!(beta >= 1.0) || std::fabs(beta - r) > 1e-12) {
            throw std::invalid_argument("fso.beta must be a positive integer, got " + std::to_string(beta));
        }
        return static_cast<int>(r);
    }

    void validate() const {
        if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("fso.alpha must be positive");
        (void)beta_int();
        if (!(b0 > 0.0) || !std::isfinite(b0)) throw std::invalid_argument("fso.b0 must be positive");
        if (!(Omega >= 0.0) || !std::isfinite(Omega)) throw std::invalid_argument("fso.Omega must be non-negative");
        if (!(rho_M >= 0.0 && rho_M <= 1.0)) throw std::invalid_argument("fso.rho_M must lie in [0, 1]");
        if (!std::isfinite(phi_AB)) throw std::invalid_argument("fso.phi_AB must be finite");
    }
};

struct MalagaDerived {
    int beta = 1;
    double g = 0.0;
    double omega_prime = 0.0;
    double A = 0.0;       // NaN in gg_mode, where A alone is singular
    double log_A = 0.0;
    std::vector<double> a_k;      // k = 1..beta, stored at index k-1
    std::vector<double> log_a_k;  // -inf where a_k = 0
    // log of A a_k (alpha beta / (g beta + Omega'))^{-(alpha+k)/2}; -inf marks an absent term
    std::vector<double> log_weight;
    bool gg_mode = false;
};

inline MalagaDerived derive_malaga_constants(const MalagaParams& p) {
    p.validate();
    MalagaDerived d;
    d.beta = p.beta_int();
    const double alpha = p.alpha;
    const double beta = d.beta;
    d.g = 2.0 * p.b0 * (1.0 - p.rho_M);
    d.omega_prime = p.Omega + 2.0 * p.b0 * p.rho_M +
                    2.0 * std::sqrt(2.0 * p.b0 * p.rho_M * p.Omega) * std::cos(p.phi_AB);
    if (d.omega_prime < 0.0 && d.omega_prime > -1e-15) d.omega_prime = 0.0;
    if (d.omega_prime < 0.0) {
        throw std::invalid_argument("Malaga coherent power Omega' is negative for these parameters");
    }
    const double g = d.g;
    const double op = d.omega_prime;
    d.gg_mode = g < 1e-12 || p.rho_M == 1.0;
    const double ninf = -std::numeric_limits<double>::infinity();
    d.a_k.assign(d.beta, 0.0);
    d.log_a_k.assign(d.beta, ninf);
    d.log_weight.assign(d.beta, ninf);

    if (d.gg_mode) {
        if (!(op > 0.0)) {
            throw std::invalid_argument("Gamma-Gamma reduction needs a positive coherent power Omega'");
        }
        // only k = beta survives; A a_beta (alpha beta / Omega')^{-(alpha+beta)/2} = 2 / (Gamma(alpha) Gamma(beta))
        const double lw = std::log(2.0) - ln_gamma(alpha) - ln_gamma(beta);
        d.log_weight[d.beta - 1] = lw;
        const double log_aab = lw + 0.5 * (alpha + beta) * std::log(alpha * beta / op);
        d.A = std::numeric_limits<double>::quiet_NaN();
        d.log_A = std::numeric_limits<double>::quiet_NaN();
        d.log_a_k[d.beta - 1] = log_aab;  // holds log(A a_beta) in this mode
        d.a_k[d.beta - 1] = std::exp(log_aab);
        return d;
    }

    const double s = g * beta + op;
    d.log_A = std::log(2.0) + 0.5 * alpha * std::log(alpha) - (1.0 + 0.5 * alpha) * std::log(g) -
              ln_gamma(alpha) + (beta + 0.5 * alpha) * std::log(g * beta / s);
    d.A = std::exp(d.log_A);
    for (int k = 1; k <= d.beta; ++k) {
        double la = ln_binomial(beta - 1.0, k - 1.0) + (1.0 - 0.5 * k) * std::log(s) - std::lgamma(double(k)) +
                    0.5 * k * std::log(alpha / beta);
        if (k > 1) {
            la = op > 0.0 ? la + (k - 1) * std::log(op / g) : ninf;
        }
        d.log_a_k[k - 1] = la;
        d.a_k[k - 1] = std::exp(la);
        if (std::isfinite(la)) {
            d.log_weight[k - 1] = d.log_A + la - 0.5 * (alpha + k) * std::log(alpha * beta / s);
        }
    }
    return d;
}

// ---------------------------------------------------------------------------
// Geometry and pointing errors

struct FsoGeometry {
    double wavelength = 785e-9;  // m
    double distance = 1000.0;    // m
    double cn2 = 0.83e-14;       // m^{-2/3}
    double chi = 0.0;            // 1/m
    // Use this Rytov variance instead of the one implied by cn2.
    std::optional<double> sigma_R2_override;

    void validate() const {
        if (!(wavelength > 0.0)) throw std::invalid_argument("fso.wavelength must be positive");
        if (!(distance > 0.0)) throw std::invalid_argument("fso.d must be positive");
        if (!(cn2 > 0.0)) throw std::invalid_argument("fso.cn2 must be positive");
        if (!(chi >= 0.0)) throw std::invalid_argument("fso.chi must be non-negative");
        if (sigma_R2_override && !(*sigma_R2_override > 0.0)) {
            throw std::invalid_argument("fso.sigma_R2 must be positive");
        }
    }
};

struct GeometryDerived {
    double iota = 0.0;      // wave number
    double sigma_R2 = 0.0;  // Rytov variance
    double I_l = 1.0;       // path loss
};

inline GeometryDerived derive_geometry(const FsoGeometry& g) {
    g.validate();
    GeometryDerived out;
    out.iota = 2.0 * std::numbers::pi / g.wavelength;
    out.sigma_R2 = g.sigma_R2_override ? *g.sigma_R2_override
                                       : 1.23 * g.cn2 * std::pow(out.iota, 7.0 / 6.0) *
                                             std::pow(g.distance, 11.0 / 6.0);
    out.I_l = std::exp(-g.chi * g.distance);
    return out;
}

struct PointingParams {
    double a = 0.05;      // detector aperture radius, m
    double a0 = 0.05;     // beam waist radius, m
    double F0 = -10.0;    // radius of curvature, m
    double sigma_s = 0.05;  // jitter standard deviation, m

    void validate() const {
        if (!(a > 0.0)) throw std::invalid_argument("fso.a must be positive");
        if (!(a0 > 0.0)) throw std::invalid_argument("fso.a0 must be positive");
        if (!(F0 != 0.0) || !std::isfinite(F0)) throw std::invalid_argument("fso.F0 must be finite and nonzero");
        if (!(sigma_s > 0.0)) {
            throw std::invalid_argument("fso.sigma_s must be positive (zero jitter is not supported)");
        }
    }
};

struct PointingDerived {
    double theta_o = 0.0;
    double lambda_o = 0.0;
    double lambda_1 = 0.0;
    double a_d = 0.0;
    double v = 0.0;
    double A0 = 0.0;
    double a_deq = 0.0;
    double xi = 0.0;
    double kappa = 0.0;
};

inline PointingDerived derive_pointing(const PointingParams& p, const FsoGeometry& geo) {
    p.validate();
    const GeometryDerived gd = derive_geometry(geo);
    PointingDerived d;
    d.theta_o = 1.0 - geo.distance / p.F0;
    d.lambda_o = 2.0 * geo.distance / (gd.iota * p.a0 * p.a0);
    d.lambda_1 = d.lambda_o / (d.theta_o * d.theta_o + d.lambda_o * d.lambda_o);
    const double sigma_R_12_5 = std::pow(gd.sigma_R2, 6.0 / 5.0);
    const double spread = (d.theta_o + d.lambda_o) * (1.0 + 1.63 * sigma_R_12_5 * d.lambda_1);
    if (!(spread > 0.0)) {
        throw std::invalid_argument("beam geometry gives a non-positive beam radius at the receiver");
    }
    d.a_d = p.a0 * std::sqrt(spread);
    d.v = std::sqrt(std::numbers::pi) * p.a / (std::sqrt(2.0) * d.a_d);
    const double ev = rfso::erf(d.v);
    d.A0 = ev * ev;
    d.a_deq = d.a_d * std::sqrt(std::sqrt(std::numbers::pi) * ev / (2.0 * d.v * std::exp(-d.v * d.v)));
    d.xi = d.a_deq / (2.0 * p.sigma_s);
    d.kappa = d.xi * d.xi / (d.xi * d.xi + 1.0);
    return d;
}

// ---------------------------------------------------------------------------
// FSO hop

struct FsoHopParams {
    MalagaParams malaga;
    PointingParams pointing;
    FsoGeometry geometry;
    double mu2 = 1000.0;  // linear electrical SNR

    void validate() const {
        malaga.validate();
        pointing.validate();
        geometry.validate();
        if (!(mu2 > 0.0) || !std::isfinite(mu2)) throw std::invalid_argument("fso.mu2 must be positive");
    }
};

/// Transmit powers and noise figures from which the two SNR scales follow.
struct LinkBudget {
    double Ps = 1.0;
    double Pt = 1.0;
    double eta = 1.0;
    double sigma_sr2 = 1e-3;
    double sigma_rd2 = 1e-3;
    double m_index = 1.0;

    void validate() const {
        if (!(Ps > 0 && Pt > 0 && eta > 0 && sigma_sr2 > 0 && sigma_rd2 > 0)) {
            throw std::invalid_argument("link budget quantities must be positive");
        }
        if (m_index != 1.0) throw std::invalid_argument("modulation index must be 1");
    }

    double mu1() const {
        validate();
        return Ps / sigma_sr2;
    }

    double mu2(const FsoHopParams& fso) const {
        validate();
        const MalagaDerived md = derive_malaga_constants(fso.malaga);
        const PointingDerived pd = derive_pointing(fso.pointing, fso.geometry);
        const GeometryDerived gd = derive_geometry(fso.geometry);
        const double mean = pd.A0 * gd.I_l * pd.kappa * (md.g + md.omega_prime);
        return eta * eta * Pt * Pt * mean * mean / sigma_rd2;
    }
};

/// Everything the FSO-hop distribution needs, derived once.
struct FsoHopModel {
    FsoHopParams params;
    MalagaDerived malaga;
    GeometryDerived geometry;
    PointingDerived pointing;
    double xi2 = 0.0;
    // scale of the G-function argument: B sqrt(gamma / mu2)
    double B = 0.0;

    explicit FsoHopModel(const FsoHopParams& p) : params(p) {
        p.validate();
        malaga = derive_malaga_constants(p.malaga);
        geometry = derive_geometry(p.geometry);
        pointing = derive_pointing(p.pointing, p.geometry);
        xi2 = pointing.xi * pointing.xi;
        const double alpha = p.malaga.alpha;
        const double beta = malaga.beta;
        B = alpha * beta * pointing.kappa * (malaga.g + malaga.omega_prime) /
            (malaga.g * beta + malaga.omega_prime);
    }

    double argument(double gamma) const { return B * std::sqrt(gamma) / std::sqrt(params.mu2); }
};

namespace detail {

inline double fso_sum(const FsoHopModel& m, const std::function<MeijerGSpec(int)>& spec_for_k) {
    double acc = 0.0;
    for (int k = 1; k <= m.malaga.beta; ++k) {
        const double lw = m.malaga.log_weight[k - 1];
        if (!std::isfinite(lw)) continue;
        acc += meijer_g_detailed(spec_for_k(k), GStrategy::automatic, 1e-18, lw).value;
    }
    return acc;
}

} // namespace detail

inline double gamma2_pdf(double gamma, const FsoHopModel& m) {
    if (!(gamma >= 0.0)) throw std::domain_error("gamma2_pdf: gamma must be non-negative");
    const double alpha = m.params.malaga.alpha;
    const double xi2 = m.xi2;
    if (gamma == 0.0) {
        // density behaves like gamma^{b_min/2 - 1} near the origin
        double bmin = std::min(xi2, alpha);
        int kmin = 0;
        for (int k = 1; k <= m.malaga.beta; ++k) {
            if (std::isfinite(m.malaga.log_weight[k - 1])) {
                kmin = k;
                break;
            }
        }
        bmin = std::min(bmin, double(kmin));
        if (bmin < 2.0) return std::numeric_limits<double>::infinity();
        if (bmin > 2.0) return 0.0;
        // b_min == 2: finite limit only when that pole is simple
        const double ys[] = {xi2, alpha, double(kmin)};
        int hits = 0;
        for (double y : ys) hits += (std::fabs(y - 2.0) < 1e-12);
        if (hits > 1) return std::numeric_limits<double>::infinity();
        double acc = 0.0;
        for (int k = 1; k <= m.malaga.beta; ++k) {
            const double lw = m.malaga.log_weight[k - 1];
            if (!std::isfinite(lw)) continue;
            const double b[] = {xi2, alpha, double(k)};
            bool has_two = false;
            double coef_log = 0.0;
            for (double y : b) {
                if (std::fabs(y - 2.0) < 1e-12) has_two = true;
                else coef_log += ln_gamma(y - 2.0);
            }
            if (!has_two) continue;
            acc += std::exp(lw + coef_log - ln_gamma(xi2 + 1.0 - 2.0));
        }
        return xi2 / 4.0 * acc * m.B * m.B / m.params.mu2;
    }
    const double x = m.argument(gamma);
    const double s = detail::fso_sum(m, [&](int k) {
        return MeijerGSpec{3, 0, {xi2 + 1.0}, {xi2, alpha, double(k)}, x};
    });
    return xi2 / 4.0 * (s / gamma);
}

/// 1 - F(gamma), computed directly so that the upper tail keeps relative accuracy.
inline double gamma2_ccdf(double gamma, const FsoHopModel& m) {
    if (!(gamma >= 0.0)) throw std::domain_error("gamma2_ccdf: gamma must be non-negative");
    if (gamma == 0.0) return 1.0;
    if (std::isinf(gamma)) return 0.0;
    const double alpha = m.params.malaga.alpha;
    const double xi2 = m.xi2;
    const double x = m.argument(gamma);
    const double s = detail::fso_sum(m, [&](int k) {
        return MeijerGSpec{4, 0, {1.0, xi2 + 1.0}, {xi2, alpha, double(k), 0.0}, x};
    });
    return std::clamp(xi2 / 2.0 * s, 0.0, 1.0);
}

inline double gamma2_cdf(double gamma, const FsoHopModel& m) {
    if (!(gamma >= 0.0)) throw std::domain_error("gamma2_cdf: gamma must be non-negative");
    if (gamma == 0.0) return 0.0;
    if (std::isinf(gamma)) return 1.0;
    const double alpha = m.params.malaga.alpha;
    const double xi2 = m.xi2;
    const double x = m.argument(gamma);
    const double s = detail::fso_sum(m, [&](int k) {
        return MeijerGSpec{3, 1, {1.0, xi2 + 1.0}, {xi2, alpha, double(k), 0.0}, x};
    });
    const double F = xi2 / 2.0 * s;
    // the upper tail is resolved better through the complement
    if (F > 0.5) return 1.0 - gamma2_ccdf(gamma, m);
    return std::clamp(F, 0.0, 1.0);
}

inline double gamma2_pdf(double gamma, const FsoHopParams& p) { return gamma2_pdf(gamma, FsoHopModel(p)); }
inline double gamma2_cdf(double gamma, const FsoHopParams& p) { return gamma2_cdf(gamma, FsoHopModel(p)); }
inline double gamma2_ccdf(double gamma, const FsoHopParams& p) { return gamma2_ccdf(gamma, FsoHopModel(p)); }

// ---------------------------------------------------------------------------
// RF joint density of (actual, estimated) SNR of the selected relay

inline double rf_joint_pdf(double x, double y, const RfHopParams& rf) {
    rf.validate();
    if (!(x >= 0.0 && y >= 0.0)) throw std::domain_error("rf_joint_pdf: arguments must be non-negative");
    if (rf.rho >= 1.0) {
        throw std::domain_error("rf_joint_pdf: rho = 1 has no joint density");
    }
    const double s = (1.0 - rf.rho) * rf.mu1;
    const double zb = 2.0 * std::sqrt(rf.rho * x * y) / s;
    const double i0s = bessel_i0_scaled(zb);
    // sum_i C(l-1,i) (-1)^i exp(-psi_i y / s) = exp(-psi_0 y / s) (1 - exp(-y / mu1))^{l-1}
    const double lead = std::log(rf.l * binomial(rf.M, rf.l)) - std::log(s * rf.mu1);
    double e = lead - (x + rf.psi(0) * y) / s + zb;
    if (rf.l > 1) {
        if (y == 0.0) return 0.0;
        e += (rf.l - 1) * std::log(-std::expm1(-y / rf.mu1));
    }
    const double acc = std::exp(e);
    return std::max(0.0, acc * i0s);
}

} // namespace rfso
