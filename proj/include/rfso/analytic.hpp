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

// Outage probability of the two-hop link: the closed-form series, its
// special cases and high-SNR floors, and a direct double-integral oracle.
//
// The outage probability splits as
//   P = (1 - I1) + I2,
//   I1 = P(gamma_1 > gamma_th)                      (RF-only block)
//   I2 = E[F_{gamma_2}(gamma_th y / x)] over the shifted RF joint density.
// I2 expands into a series over the Bessel index t; the terms decay
// geometrically with ratio rho / psi_i.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "rfso/channel.hpp"
#include "rfso/error.hpp"
#include "rfso/meijer_g.hpp"
#include "rfso/specfun.hpp"

namespace rfso {

struct SeriesControl {
    int t_max = 200;
    double rel_tol = 1e-12;

    void validate() const {
        if (t_max < 1) throw std::invalid_argument("series.t_max must be at least 1");
        if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw std::invalid_argument("series.rel_tol must lie in (0, 1)");
    }
};

struct Scenario {
    std::string id = "scenario";
    RfHopParams rf;
    FsoHopParams fso;
    double gamma_th = 0.1;  // linear
    SeriesControl series;

    void validate() const {
        rf.validate();
        fso.validate();
        series.validate();
        if (!(gamma_th > 0.0) || !std::isfinite(gamma_th)) throw std::invalid_argument("gamma_th must be positive");
    }
};

enum class Method { exact, gg, single, floor_mu2, floor_mu1, floor_mu1_app, quadrature, mc };

inline const char* to_string(Method m) {
    switch (m) {
    case Method::exact: return "exact";
    case Method::gg: return "gg";
    case Method::single: return "single";
    case Method::floor_mu2: return "floor_mu2";
    case Method::floor_mu1: return "floor_mu1";
    case Method::floor_mu1_app: return "floor_mu1_app";
    case Method::quadrature: return "quadrature";
    case Method::mc: return "mc";
    }
    return "?";
}

struct OutageEstimate {
    double p_out = 0.0;
    double uncertainty = 0.0;
    Method method = Method::exact;
    long long work = 0;     // G evaluations, integrand evaluations, or samples
    double raw_value = 0.0;  // value before clamping to [0, 1]
    std::vector<std::string> warnings;
};

namespace detail {

inline double sign_of_index(int i) { return (i % 2) ? -1.0 : 1.0; }

// c_i = l C(M,l) C(l-1,i) (-1)^i / (M-l+i+1); these sum to one.
inline double selection_weight(const RfHopParams& rf, int i) {
    return rf.l * binomial(rf.M, rf.l) * binomial(rf.l - 1, i) * sign_of_index(i) / (rf.M - rf.l + i + 1);
}

inline double rf_exponent(const RfHopParams& rf, double gamma_th, int i) {
    return gamma_th * (rf.M - rf.l + i + 1) / (rf.psi(i) * rf.mu1);
}

// 1 - I1 written without the cancellation of "1 minus something close to 1".
inline double rf_block(const RfHopParams& rf, double gamma_th) {
    double acc = 0.0;
    for (int i = 0; i < rf.l; ++i) {
        acc += selection_weight(rf, i) * -std::expm1(-rf_exponent(rf, gamma_th, i));
    }
    return acc;
}

inline void finish(OutageEstimate& e, double raw) {
    e.raw_value = raw;
    if (!std::isfinite(raw)) {
        throw EvaluationError("outage value is not finite", std::string("method=") + to_string(e.method));
    }
    if (raw < -1e-9 || raw > 1.0 + 1e-9) {
        throw EvaluationError("outage value outside [0, 1] beyond rounding",
                              std::string("method=") + to_string(e.method) + " raw=" + to_sci(raw));
    }
    if (raw < 0.0 || raw > 1.0) {
        e.warnings.push_back("clamped pre-clamp value " + to_sci(raw));
    }
    e.p_out = std::clamp(raw, 0.0, 1.0);
}

struct TermValue {
    double value;
    long long work;
};

struct SeriesOutcome {
    double sum = 0.0;
    double uncertainty = 0.0;
    int terms = 0;
    long long work = 0;
    std::vector<std::string> warnings;
};

// Sum term(0) + term(1) + ... under the truncation contract: stop after three
// consecutive terms below rel_tol * |sum|. The uncertainty is the larger of a
// geometric tail bound and the change since t_max / 2.
template <class Term>
SeriesOutcome sum_t_series(Term&& term, double ratio_bound, bool single_term, const SeriesControl& sc) {
    SeriesOutcome out;
    double sum = 0.0;
    double half_sum = std::numeric_limits<double>::quiet_NaN();
    double last = 0.0;
    double prev = 0.0;
    int quiet = 0;
    const int half = sc.t_max / 2;
    bool converged = false;
    int t = 0;
    for (; t <= sc.t_max; ++t) {
        const TermValue tv = term(t);
        out.work += tv.work;
        prev = last;
        last = tv.value;
        sum += tv.value;
        if (t == half) half_sum = sum;
        if (single_term) {
            converged = true;
            ++t;
            break;
        }
        if (std::fabs(tv.value) <= sc.rel_tol * std::fabs(sum)) {
            if (++quiet >= 3) {
                converged = true;
                ++t;
                break;
            }
        } else {
            quiet = 0;
        }
    }
    out.terms = t;
    out.sum = sum;
    double r = std::min(ratio_bound, 0.999999);
    if (prev != 0.0 && std::fabs(last / prev) < 1.0) r = std::max(r, std::fabs(last / prev));
    const double tail = single_term ? 0.0 : std::fabs(last) * r / (1.0 - r);
    const double drift = (std::isnan(half_sum) || t - 1 <= half) ? 0.0 : std::fabs(sum - half_sum);
    out.uncertainty = std::max(tail, drift);
    if (!converged) {
        if (tail <= 1e-9) {
            out.warnings.push_back("t-series reached t_max=" + std::to_string(sc.t_max) +
                                   " before rel_tol; tail bound " + to_sci(tail));
        } else {
            throw SeriesNotConverged("t-series did not converge within t_max", sum, tail, out.terms);
        }
    }
    return out;
}

// G^{6,2}_{3,7} kernel shared by the series paths.
inline MeijerGSpec kernel_spec(double xi2, double alpha, double kk, int t, int d, double z) {
    return MeijerGSpec{6, 2, {1.0, -double(t), 0.5 * (xi2 + 2.0)},
                       {0.5 * xi2, 0.5 * alpha, 0.5 * (alpha + 1.0), 0.5 * kk, 0.5 * (kk + 1.0), 1.0 + d, 0.0}, z};
}

// Inner d-sum for fixed (k, i, t): sum_j C(t,j) X^j G(.., 1+d, ..), d = t - j.
// The terms are positive; summation starts at d = t and stops once they are
// negligible and decreasing.
inline TermValue d_sum(double xi2, double alpha, double kk, int t, double z, double X, double log_scale) {
    double acc = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    long long work = 0;
    const double lnX = X > 0.0 ? std::log(X) : -std::numeric_limits<double>::infinity();
    for (int j = 0; j <= t; ++j) {
        if (j > 0 && X == 0.0) break;
        const double lc = ln_binomial(t, j) + (j > 0 ? j * lnX : 0.0);
        const MeijerGResult g =
            meijer_g_detailed(kernel_spec(xi2, alpha, kk, t, t - j, z), GStrategy::automatic, 1e-17, log_scale + lc);
        ++work;
        const double v = g.value;
        acc += v;
        if (j > 0 && std::fabs(v) <= 1e-16 * std::fabs(acc) && std::fabs(v) <= prev) break;
        prev = std::fabs(v);
    }
    return {acc, work};
}

struct KernelWeights {
    std::vector<int> k;
    std::vector<double> log_w;  // log of xi^2 2^{alpha+k-4} W_k / pi
};

inline KernelWeights kernel_weights(const FsoHopModel& m) {
    KernelWeights kw;
    const double alpha = m.params.malaga.alpha;
    for (int k = 1; k <= m.malaga.beta; ++k) {
        const double lw = m.malaga.log_weight[k - 1];
        if (!std::isfinite(lw)) continue;
        kw.k.push_back(k);
        kw.log_w.push_back(lw + std::log(m.xi2) + (alpha + k - 4.0) * std::log(2.0) - std::log(std::numbers::pi));
    }
    return kw;
}

inline double kernel_argument(const FsoHopModel& m, double gamma_th, double psi) {
    return m.B * m.B * gamma_th / (16.0 * psi * m.params.mu2);
}

inline void check_rho(const RfHopParams& rf) {
    if (!(rf.rho < 1.0)) {
        throw std::invalid_argument("analytic outage requires rho < 1");
    }
}

} // namespace detail

/// I1 = P(gamma_1 > gamma_th) in closed form.
inline double im1_closed_form(const RfHopParams& rf, double gamma_th) {
    rf.validate();
    double acc = 0.0;
    for (int i = 0; i < rf.l; ++i) {
        acc += detail::selection_weight(rf, i) * std::exp(-detail::rf_exponent(rf, gamma_th, i));
    }
    return acc;
}

/// Outage floor as mu2 grows without bound; depends on RF quantities only.
inline OutageEstimate outage_floor_mu2(const Scenario& s) {
    s.rf.validate();
    OutageEstimate e;
    e.method = Method::floor_mu2;
    e.work = s.rf.l;
    detail::finish(e, detail::rf_block(s.rf, s.gamma_th));
    return e;
}

/// Full closed-form series for the Malaga hop.
inline OutageEstimate outage_exact(const Scenario& s) {
    s.validate();
    detail::check_rho(s.rf);
    const FsoHopModel m(s.fso);
    const RfHopParams& rf = s.rf;
    const double alpha = s.fso.malaga.alpha;
    const double X = s.gamma_th / ((1.0 - rf.rho) * rf.mu1);
    const detail::KernelWeights kw = detail::kernel_weights(m);
    const double log_common = std::log(rf.l * binomial(rf.M, rf.l)) + std::log1p(-rf.rho) - X;

    std::vector<double> z(rf.l), log_psi(rf.l), sgn(rf.l), log_ci(rf.l);
    for (int i = 0; i < rf.l; ++i) {
        z[i] = detail::kernel_argument(m, s.gamma_th, rf.psi(i));
        log_psi[i] = std::log(rf.psi(i));
        sgn[i] = detail::sign_of_index(i);
        log_ci[i] = std::log(binomial(rf.l - 1, i));
    }
    const double log_rho = rf.rho > 0.0 ? std::log(rf.rho) : 0.0;
    auto term = [&](int t) {
        detail::TermValue tv{0.0, 0};
        const double lt = t * log_rho - 2.0 * std::lgamma(t + 1.0);
        for (std::size_t kx = 0; kx < kw.k.size(); ++kx) {
            for (int i = 0; i < rf.l; ++i) {
                const double ls = log_common + kw.log_w[kx] + log_ci[i] + lt - (t + 1.0) * log_psi[i];
                const detail::TermValue ds = detail::d_sum(m.xi2, alpha, kw.k[kx], t, z[i], X, ls);
                tv.value += sgn[i] * ds.value;
                tv.work += ds.work;
            }
        }
        return tv;
    };
    const detail::SeriesOutcome so =
        detail::sum_t_series(term, rf.rho / rf.psi(0), rf.rho == 0.0, s.series);
    OutageEstimate e;
    e.method = Method::exact;
    e.work = so.work;
    e.uncertainty = so.uncertainty;
    e.warnings = so.warnings;
    detail::finish(e, detail::rf_block(rf, s.gamma_th) + so.sum);
    return e;
}

/// Gamma-Gamma special case (no off-axis scatter).
inline OutageEstimate outage_gg(const Scenario& s) {
    s.validate();
    detail::check_rho(s.rf);
    const double g = 2.0 * s.fso.malaga.b0 * (1.0 - s.fso.malaga.rho_M);
    if (!(g < 1e-12 || s.fso.malaga.rho_M == 1.0)) {
        throw std::invalid_argument("outage_gg requires rho_M = 1 (no off-axis scatter)");
    }
    const RfHopParams& rf = s.rf;
    const double alpha = s.fso.malaga.alpha;
    const int beta = s.fso.malaga.beta_int();
    const PointingDerived pd = derive_pointing(s.fso.pointing, s.fso.geometry);
    const double xi2 = pd.xi * pd.xi;
    const double kappa = pd.kappa;
    const double mu1 = rf.mu1;
    const double rho = rf.rho;
    const double ex = s.gamma_th / ((1.0 - rho) * mu1);
    const double log_front = std::log(rf.l * binomial(rf.M, rf.l) * xi2) + (alpha + beta - 3.0) * std::log(2.0) -
                             std::log(std::numbers::pi) - std::lgamma(alpha) - std::lgamma(double(beta));

    auto term = [&](int t) {
        detail::TermValue tv{0.0, 0};
        for (int i = 0; i < rf.l; ++i) {
            const double psi = rf.psi(i);
            const double zi = alpha * alpha * beta * beta * kappa * kappa * s.gamma_th / (16.0 * psi * s.fso.mu2);
            double inner = 0.0;
            double prev = std::numeric_limits<double>::infinity();
            for (int d = t; d >= 0; --d) {
                const int j = t - d;
                // C(t,d) rho^t psi^{-(t+1)} / (t!^2 (1-rho)^{t-d-1} mu1^{t-d}) gamma_th^{t-d} e^{-ex}
                double lg = ln_binomial(t, d) - 2.0 * std::lgamma(t + 1.0) - (t + 1.0) * std::log(psi) -
                            (t - d - 1.0) * std::log1p(-rho) - j * std::log(mu1) + j * std::log(s.gamma_th) - ex;
                if (t > 0) lg += t * std::log(rho);
                const MeijerGSpec spec{6, 2, {1.0, -double(t), (xi2 + 2.0) / 2.0},
                                       {xi2 / 2.0, alpha / 2.0, (alpha + 1.0) / 2.0, beta / 2.0, (beta + 1.0) / 2.0,
                                        1.0 + d, 0.0},
                                       zi};
                const double v = meijer_g_detailed(spec, GStrategy::automatic, 1e-17, log_front + lg).value;
                ++tv.work;
                inner += v;
                if (j > 0 && std::fabs(v) <= 1e-16 * std::fabs(inner) && std::fabs(v) <= prev) break;
                prev = std::fabs(v);
            }
            tv.value += detail::sign_of_index(i) * binomial(rf.l - 1, i) * inner;
        }
        return tv;
    };
    const detail::SeriesOutcome so = detail::sum_t_series(term, rho / rf.psi(0), rho == 0.0, s.series);

    double first = 0.0;
    for (int i = 0; i < rf.l; ++i) {
        first += detail::selection_weight(rf, i) *
                 -std::expm1(-s.gamma_th * (rf.M - rf.l + i + 1) / (rf.psi(i) * mu1));
    }
    OutageEstimate e;
    e.method = Method::gg;
    e.work = so.work;
    e.uncertainty = so.uncertainty;
    e.warnings = so.warnings;
    detail::finish(e, first + so.sum);
    return e;
}

/// One relay (M = l = 1).
inline OutageEstimate outage_single_relay(const Scenario& s) {
    s.validate();
    detail::check_rho(s.rf);
    if (s.rf.M != 1 || s.rf.l != 1) {
        throw std::invalid_argument("outage_single_relay requires M = l = 1");
    }
    const FsoHopModel m(s.fso);
    const double alpha = s.fso.malaga.alpha;
    const double beta = m.malaga.beta;
    const double rho = s.rf.rho;
    const double mu1 = s.rf.mu1;
    const double u = s.gamma_th / ((1.0 - rho) * mu1);
    const double ratio = (m.malaga.g + m.malaga.omega_prime) / (m.malaga.g * beta + m.malaga.omega_prime);
    const double z = alpha * alpha * beta * beta * m.pointing.kappa * m.pointing.kappa * ratio * ratio *
                     s.gamma_th / (16.0 * s.fso.mu2);

    auto term = [&](int t) {
        detail::TermValue tv{0.0, 0};
        for (int k = 1; k <= m.malaga.beta; ++k) {
            const double lw = m.malaga.log_weight[k - 1];
            if (!std::isfinite(lw)) continue;
            const double lk = lw + std::log(m.xi2) + (alpha + k - 4.0) * std::log(2.0) - std::log(std::numbers::pi);
            double inner = 0.0;
            double prev = std::numeric_limits<double>::infinity();
            for (int d = t; d >= 0; --d) {
                double lg = lk + ln_binomial(t, d) - 2.0 * std::lgamma(t + 1.0) + std::log1p(-rho) - u;
                if (t > 0) lg += t * std::log(rho);
                if (t > d) lg += (t - d) * std::log(u);
                const MeijerGSpec spec = detail::kernel_spec(m.xi2, alpha, k, t, d, z);
                const double v = meijer_g_detailed(spec, GStrategy::automatic, 1e-17, lg).value;
                ++tv.work;
                inner += v;
                if (d < t && std::fabs(v) <= 1e-16 * std::fabs(inner) && std::fabs(v) <= prev) break;
                prev = std::fabs(v);
            }
            tv.value += inner;
        }
        return tv;
    };
    const detail::SeriesOutcome so = detail::sum_t_series(term, rho, rho == 0.0, s.series);
    OutageEstimate e;
    e.method = Method::single;
    e.work = so.work;
    e.uncertainty = so.uncertainty;
    e.warnings = so.warnings;
    detail::finish(e, -std::expm1(-s.gamma_th / mu1) + so.sum);
    return e;
}

namespace detail {

inline OutageEstimate floor_mu1_impl(const Scenario& s, bool first_term_only) {
    s.validate();
    check_rho(s.rf);
    const FsoHopModel m(s.fso);
    const RfHopParams& rf = s.rf;
    const double alpha = s.fso.malaga.alpha;
    const KernelWeights kw = kernel_weights(m);
    const double log_common = std::log(rf.l * binomial(rf.M, rf.l)) + std::log1p(-rf.rho);
    const double log_rho = rf.rho > 0.0 ? std::log(rf.rho) : 0.0;
    auto term = [&](int t) {
        TermValue tv{0.0, 0};
        for (std::size_t kx = 0; kx < kw.k.size(); ++kx) {
            for (int i = 0; i < rf.l; ++i) {
                const double psi = rf.psi(i);
                const double ls = log_common + kw.log_w[kx] + std::log(binomial(rf.l - 1, i)) + t * log_rho -
                                  2.0 * std::lgamma(t + 1.0) - (t + 1.0) * std::log(psi);
                const MeijerGSpec spec = kernel_spec(m.xi2, alpha, kw.k[kx], t, t, kernel_argument(m, s.gamma_th, psi));
                tv.value += sign_of_index(i) * meijer_g_detailed(spec, GStrategy::automatic, 1e-17, ls).value;
                ++tv.work;
            }
        }
        return tv;
    };
    const SeriesOutcome so = sum_t_series(term, rf.rho / rf.psi(0), first_term_only || rf.rho == 0.0, s.series);
    OutageEstimate e;
    e.method = first_term_only ? Method::floor_mu1_app : Method::floor_mu1;
    e.work = so.work;
    e.uncertainty = first_term_only ? 0.0 : so.uncertainty;
    e.warnings = so.warnings;
    if (first_term_only && rf.rho > 0.3) {
        e.warnings.push_back("first-term floor approximation used with rho > 0.3; it is accurate only for small rho");
    }
    // the RF block vanishes in this limit since the selection weights sum to one
    finish(e, so.sum);
    return e;
}

} // namespace detail

/// Outage floor as mu1 grows without bound.
inline OutageEstimate outage_floor_mu1(const Scenario& s) { return detail::floor_mu1_impl(s, false); }

/// First term (t = 0) of the mu1 floor series.
inline OutageEstimate outage_floor_mu1_first_term(const Scenario& s) { return detail::floor_mu1_impl(s, true); }

// ---------------------------------------------------------------------------
// Quadrature oracle

struct QuadratureControl {
    double rel_tol = 1e-9;
    double abs_target = 1e-7;
};

/// Direct two-dimensional quadrature of
///   P = P(gamma_1 < gamma_th) + int int F(gamma_th y / x) f(x + gamma_th, y) dx dy.
inline OutageEstimate outage_quadrature_oracle(const Scenario& s, const QuadratureControl& qc = {}) {
    s.validate();
    detail::check_rho(s.rf);
    const FsoHopModel m(s.fso);
    const RfHopParams rf = s.rf;
    const double gth = s.gamma_th;
    const double rho = rf.rho;
    const double mu1 = rf.mu1;
    const double sx = (1.0 - rho) * mu1;  // spread of x around the ridge rho y
    long long evals = 0;
    double err_total = 0.0;

    boost::math::quadrature::exp_sinh<double> es;
    boost::math::quadrature::tanh_sinh<double> ts;

    auto F = [&](double u) {
        if (u <= 0.0) return 0.0;
        if (!std::isfinite(u)) return 1.0;
        return u < s.fso.mu2 ? gamma2_cdf(u, m) : 1.0 - gamma2_ccdf(u, m);
    };

    // integrate g(x) over [0, inf) where the mass sits near x0 with width w
    auto semi_infinite = [&](auto&& g, double x0, double w, double& err) {
        double e1 = 0.0, e2 = 0.0, l1 = 0.0;
        double left = 0.0;
        if (x0 > 0.0) {
            left = ts.integrate(g, 0.0, x0, qc.rel_tol, &e1, &l1);
        }
        auto shifted = [&](double v) { return w * g(x0 + w * v); };
        const double right = es.integrate(shifted, 0.0, std::numeric_limits<double>::infinity(), qc.rel_tol, &e2, &l1);
        err = e1 + e2;
        return left + right;
    };

    // first block: P(gamma_1 < gamma_th) = int_0^gth int_0^inf f(x, y) dy dx
    auto inner_first = [&](double x) {
        auto fy = [&](double y) {
            ++evals;
            return rf_joint_pdf(x, y, rf);
        };
        double e = 0.0;
        const double y0 = rho > 0.0 ? x / rho : 0.0;
        const double v = semi_infinite(fy, y0, mu1, e);
        return v;
    };
    double e_first = 0.0, l1 = 0.0;
    const double first = ts.integrate(inner_first, 0.0, gth, qc.rel_tol, &e_first, &l1);
    err_total += e_first;

    // second block: outer y, inner x
    auto inner_second = [&](double y) {
        auto fx = [&](double x) {
            if (x <= 0.0) return 0.0;
            ++evals;
            const double dens = rf_joint_pdf(x + gth, y, rf);
            if (dens == 0.0) return 0.0;
            return F(gth * y / x) * dens;
        };
        double e = 0.0;
        const double x0 = std::max(0.0, rho * y - gth);
        return semi_infinite(fx, x0, sx, e);
    };
    double e_second = 0.0;
    auto outer = [&](double v) { return mu1 * inner_second(mu1 * v); };
    const double second =
        es.integrate(outer, 0.0, std::numeric_limits<double>::infinity(), qc.rel_tol, &e_second, &l1);
    err_total += e_second;

    OutageEstimate e;
    e.method = Method::quadrature;
    e.work = evals;
    e.uncertainty = err_total;
    if (err_total > qc.abs_target) {
        throw EvaluationError("quadrature oracle did not reach its tolerance",
                              "achieved=" + to_sci(err_total));
    }
    detail::finish(e, first + second);
    return e;
}

} // namespace rfso
