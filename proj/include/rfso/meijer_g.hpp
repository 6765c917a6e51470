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

// Meijer G-function of real positive argument and real parameters.
//
//   G^{m,n}_{p,q}(z | a; b) = 1/(2 pi i) Int  prod_{j<m} Gamma(b_j - s) prod_{j<n} Gamma(1 - a_j + s)
//                                             -------------------------------------------------- z^s ds
//                                             prod_{j>=m} Gamma(1 - b_j + s) prod_{j>=n} Gamma(a_j - s)
//
// Two independent evaluators are provided. The residue evaluator sums the
// poles of Gamma(b_j - s) in closed form; b parameters that differ by an
// integer produce higher-order poles, which are handled by carrying a short
// Laurent expansion from pole to pole instead of perturbing the parameters.
// The contour evaluator integrates along a vertical line numerically.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "rfso/error.hpp"
#include "rfso/specfun.hpp"

namespace rfso {

struct MeijerGSpec {
    int m = 0;
    int n = 0;
    std::vector<double> a;  // a_1..a_n | a_{n+1}..a_p
    std::vector<double> b;  // b_1..b_m | b_{m+1}..b_q
    double z = 0.0;

    int p() const { return static_cast<int>(a.size()); }
    int q() const { return static_cast<int>(b.size()); }

    void validate() const {
        if (m < 0 || n < 0 || m > q() || n > p()) {
            throw std::invalid_argument("MeijerGSpec: orders out of range");
        }
        if (!(z > 0.0) || !std::isfinite(z)) {
            throw std::invalid_argument("MeijerGSpec: argument must be positive and finite");
        }
        for (double v : a) {
            if (!std::isfinite(v)) throw std::invalid_argument("MeijerGSpec: non-finite a parameter");
        }
        for (double v : b) {
            if (!std::isfinite(v)) throw std::invalid_argument("MeijerGSpec: non-finite b parameter");
        }
    }

    std::string describe() const {
        std::ostringstream os;
        os.precision(17);
        os << "G^{" << m << "," << n << "}_{" << p() << "," << q() << "}(" << z << " | ";
        for (double v : a) os << v << ' ';
        os << "; ";
        for (double v : b) os << v << ' ';
        os << ')';
        return os.str();
    }
};

enum class GStrategy { automatic, slater, contour };

inline const char* to_string(GStrategy s) {
    switch (s) {
    case GStrategy::automatic: return "auto";
    case GStrategy::slater: return "slater";
    case GStrategy::contour: return "contour";
    }
    return "?";
}

struct MeijerGResult {
    double value = 0.0;
    double abs_error = 0.0;
    GStrategy strategy = GStrategy::automatic;
    int terms = 0;  // residues summed, or integrand evaluations
};

namespace detail {

using ld = long double;

// One Gamma factor of the integrand, Gamma(c + sigma*s)^{power}.
struct GammaFactor {
    long double c;
    int sigma;  // +1 or -1
    int power;  // +1 numerator, -1 denominator
};

inline std::vector<GammaFactor> integrand_factors(const MeijerGSpec& g) {
    std::vector<GammaFactor> f;
    f.reserve(g.a.size() + g.b.size());
    for (int j = 0; j < g.q(); ++j) {
        if (j < g.m) {
            f.push_back({g.b[j], -1, +1});
        } else {
            f.push_back({1.0L - g.b[j], +1, -1});
        }
    }
    for (int j = 0; j < g.p(); ++j) {
        if (j < g.n) {
            f.push_back({1.0L - g.a[j], +1, +1});
        } else {
            f.push_back({g.a[j], -1, -1});
        }
    }
    return f;
}

constexpr double kIntegerTol = 1e-9;

inline bool near_integer(double x, long long& k) {
    const double r = std::round(x);
    if (std::fabs(x - r) <= kIntegerTol * std::max(1.0, std::fabs(x))) {
        k = static_cast<long long>(r);
        return true;
    }
    return false;
}

// Extended type for residue sums whose terms cancel heavily in long double.
using quad = boost::multiprecision::cpp_bin_float_quad;

inline ld ln_abs_gamma_t(ld x, int& sign) { return ln_abs_gamma(x, sign); }

template <class T>
T ln_abs_gamma_t(const T& x, int& sign) {
    return boost::math::lgamma(x, &sign);
}

// Truncated power series in delta, kept multiplicatively as
// delta^{-order} * mant * 2^{exp2} * R(delta), R(0) = 1, mant signed.
template <class T>
struct Laurent {
    int order = 0;
    T mant = 1;
    long exp2 = 0;
    std::vector<T> r;

    void set_log(const T& logmag, int sign) {
        using std::exp, std::floor;
        const T ln2 = boost::math::constants::ln_two<T>();
        const T k = floor(logmag / ln2);
        exp2 = static_cast<long>(k);
        mant = sign * exp(logmag - k * ln2);
    }

    void renormalize() {
        using std::fabs, std::frexp;
        const T a = fabs(mant);
        if (a > T(0x1p60L) || (a < T(0x1p-60L) && a != 0)) {
            int e = 0;
            mant = frexp(mant, &e);
            exp2 += e;
        }
    }

    T value_scale() const {
        using std::ldexp;
        return ldexp(mant, static_cast<int>(std::clamp<long>(exp2, -100000, 100000)));
    }

    // R *= (1 + q delta)
    void mul_series(const T& q) {
        for (std::size_t k = r.size(); k-- > 1;) {
            r[k] += q * r[k - 1];
        }
    }

    // R /= (1 + q delta)
    void div_series(const T& q) {
        for (std::size_t k = 1; k < r.size(); ++k) {
            r[k] -= q * r[k - 1];
        }
    }
};

// Coefficients lambda_1..lambda_{K-1} of log Gamma(w0 + sigma*delta) - log Gamma(w0)
// for regular w0, or of log[eps * Gamma(-n + eps)] - log[(-1)^n / n!] at a pole.
template <class T>
void add_log_series(std::vector<T>& lambda, const T& w0, int sigma, int power, bool pole, long long n) {
    using std::pow;
    const int K = static_cast<int>(lambda.size());
    int sk = 1;
    T fact = 1;
    for (int k = 1; k < K; ++k) {
        sk *= sigma;
        fact *= k;
        T coef;
        if (pole) {
            T harmonic = 0;
            for (long long j = 1; j <= n; ++j) {
                harmonic += 1 / pow(T(j), k);
            }
            coef = boost::math::polygamma(k - 1, T(1)) / fact + harmonic / k;
        } else {
            coef = boost::math::polygamma(k - 1, w0) / fact;
        }
        lambda[k] += power * sk * coef;
    }
}

template <class T>
std::vector<T> exp_series(const std::vector<T>& lambda) {
    const int K = static_cast<int>(lambda.size());
    std::vector<T> r(K, T(0));
    r[0] = 1;
    for (int k = 1; k < K; ++k) {
        T acc = 0;
        for (int j = 1; j <= k; ++j) {
            acc += j * lambda[j] * r[k - j];
        }
        r[k] = acc / k;
    }
    return r;
}

// Sum of residues over the poles of one family of b parameters (members that
// differ by integers). Poles sit at s = base + nu, nu = 0, 1, 2, ...
template <class T>
class PoleFamily {
public:
    PoleFamily(const std::vector<GammaFactor>& factors, double base, int size, int last_offset, double z,
               double log_prefactor)
        : factors_(factors), last_offset_(last_offset) {
        using std::log;
        const int K = size;
        w_.resize(factors_.size());
        is_int_.resize(factors_.size());
        std::vector<T> lambda(K, T(0));
        const T lnz = log(T(z));
        if (K > 1) lambda[1] += lnz;
        T logmag = T(base) * lnz + T(log_prefactor);
        int sign = 1;
        for (std::size_t f = 0; f < factors_.size(); ++f) {
            const GammaFactor& gf = factors_[f];
            T w0 = T(gf.c) + gf.sigma * T(base);
            long long k = 0;
            is_int_[f] = near_integer(static_cast<double>(w0), k);
            if (is_int_[f]) w0 = T(k);
            w_[f] = w0;
            const bool pole = is_int_[f] && k <= 0;
            if (pole) {
                const long long nn = -k;
                s_.order += gf.power;
                int sg = 1;
                logmag -= gf.power * ln_abs_gamma_t(T(nn + 1), sg);
                if ((nn % 2 == 1) != (gf.sigma < 0)) sign = -sign;
            } else {
                int sg = 1;
                logmag += gf.power * ln_abs_gamma_t(w0, sg);
                sign *= sg;
            }
            if (K > 1) add_log_series(lambda, w0, gf.sigma, gf.power, pole, -k);
        }
        s_.r = exp_series(lambda);
        s_.set_log(logmag, sign);
        z_ = z;
    }

    // Residue contribution at the current pole (already negated so that
    // G = sum of the returned terms), then advance to the next pole.
    T next_term() {
        T term = 0;
        if (s_.order > static_cast<int>(s_.r.size())) {
            throw EvaluationError("meijer_g: pole order exceeds family size",
                                  "order=" + std::to_string(s_.order));
        }
        if (s_.order >= 1) {
            term = -s_.value_scale() * s_.r[s_.order - 1];
        }
        step();
        ++nu_;
        return term;
    }

    int nu() const { return nu_; }
    bool past_members() const { return nu_ > last_offset_; }

private:
    // Moves every factor one pole to the right. Constant parts of the linear
    // factors are accumulated into one ratio; the series part is touched only
    // for families with higher-order poles.
    void step() {
        T num = z_;
        T den = 1;
        const bool series = s_.r.size() > 1;
        for (std::size_t f = 0; f < factors_.size(); ++f) {
            const GammaFactor& gf = factors_[f];
            const T& w = w_[f];
            // numerator sigma=+1 multiplies by (w + d); sigma=-1 divides by (w - 1 - d)
            const T c = gf.sigma > 0 ? w : T(w - 1);
            const int e = gf.sigma > 0 ? 1 : -1;
            const bool multiply = (gf.sigma > 0) == (gf.power > 0);
            const bool zero = is_int_[f] && c == 0;
            if (zero) {
                s_.order += multiply ? -1 : 1;
                if (e < 0) num = -num;
            } else {
                if (multiply) num *= c;
                else den *= c;
                if (series) {
                    if (multiply) s_.mul_series(e / c);
                    else s_.div_series(e / c);
                }
            }
            w_[f] = w + gf.sigma;
        }
        s_.mant *= num / den;
        s_.renormalize();
    }

    const std::vector<GammaFactor>& factors_;
    std::vector<T> w_;
    std::vector<char> is_int_;
    Laurent<T> s_;
    T z_ = 0;
    int last_offset_ = 0;
    int nu_ = 0;
};

inline MeijerGSpec inverted(const MeijerGSpec& g) {
    MeijerGSpec h;
    h.m = g.n;
    h.n = g.m;
    h.z = 1.0 / g.z;
    for (double v : g.b) h.a.push_back(1.0 - v);
    for (double v : g.a) h.b.push_back(1.0 - v);
    return h;
}

// b_1..b_m grouped into families that differ by integers.
struct PoleFamilies {
    std::vector<double> base;
    std::vector<int> size;
    std::vector<int> last_offset;
    std::vector<GammaFactor> factors;
};

inline PoleFamilies group_poles(const MeijerGSpec& g) {
    PoleFamilies pf;
    pf.factors = integrand_factors(g);
    std::vector<int> family(g.m, -1);
    for (int j = 0; j < g.m; ++j) {
        if (family[j] >= 0) continue;
        std::vector<int> members{j};
        for (int i = j + 1; i < g.m; ++i) {
            long long k = 0;
            if (family[i] < 0 && near_integer(g.b[i] - g.b[j], k)) members.push_back(i);
        }
        double lo = g.b[j];
        for (int i : members) lo = std::min(lo, g.b[i]);
        int hi_off = 0;
        for (int i : members) {
            family[i] = static_cast<int>(pf.base.size());
            hi_off = std::max(hi_off, static_cast<int>(std::llround(g.b[i] - lo)));
        }
        pf.base.push_back(lo);
        pf.size.push_back(static_cast<int>(members.size()));
        pf.last_offset.push_back(hi_off);
    }

    // Parameters that sit an integer away from a family base are pinned to it
    // exactly, so every family sees the same cancelling factors.
    for (GammaFactor& gf : pf.factors) {
        for (double b0 : pf.base) {
            long long k = 0;
            if (near_integer(static_cast<double>(gf.c + gf.sigma * static_cast<ld>(b0)), k)) {
                gf.c = static_cast<ld>(k) - gf.sigma * static_cast<ld>(b0);
                break;
            }
        }
    }
    return pf;
}

template <class T>
MeijerGResult residue_sum_as(const MeijerGSpec& g, const PoleFamilies& pf, double log_prefactor) {
    using std::fabs, std::isfinite;
    std::vector<PoleFamily<T>> fams;
    fams.reserve(pf.base.size());
    for (std::size_t f = 0; f < pf.base.size(); ++f) {
        fams.emplace_back(pf.factors, pf.base[f], pf.size[f], pf.last_offset[f], g.z, log_prefactor);
    }

    constexpr int kMaxTerms = 10000;
    const T eps = std::numeric_limits<T>::epsilon();
    const T stop_rel = eps / 100;
    T sum = 0;
    T abs_sum = 0;
    T prev = std::numeric_limits<T>::infinity();
    int quiet = 0;
    int terms = 0;
    for (int nu = 0; nu < kMaxTerms; ++nu) {
        T mag = 0;
        bool all_past = true;
        for (auto& fam : fams) {
            const T t = fam.next_term();
            sum += t;
            abs_sum += fabs(t);
            mag += fabs(t);
            all_past = all_past && fam.past_members();
        }
        terms += static_cast<int>(fams.size());
        if (!isfinite(sum) || !isfinite(abs_sum)) {
            throw EvaluationError("meijer_g(slater): residue sum overflowed", g.describe());
        }
        if (all_past && mag <= stop_rel * fabs(sum) && mag <= prev) {
            if (++quiet >= 3) {
                MeijerGResult res;
                res.value = static_cast<double>(sum);
                if (!std::isfinite(res.value)) {
                    throw EvaluationError("meijer_g(slater): value overflows double", g.describe());
                }
                res.abs_error = static_cast<double>(64 * eps * abs_sum + mag) +
                                std::numeric_limits<double>::epsilon() * std::fabs(res.value);
                res.strategy = GStrategy::slater;
                res.terms = terms;
                return res;
            }
        } else if (all_past && sum == 0 && mag == 0) {
            if (++quiet >= 3) {
                return MeijerGResult{0.0, 0.0, GStrategy::slater, terms};
            }
        } else {
            quiet = 0;
        }
        prev = mag;
    }
    throw EvaluationError("meijer_g(slater): residue series did not converge within 10000 terms",
                          g.describe());
}

// Relative error above which the long double sum is redone in quad precision.
constexpr double kQuadRetryRel = 1e-13;

inline MeijerGResult residue_sum(const MeijerGSpec& g, double log_prefactor) {
    if (g.m == 0) {
        throw EvaluationError("meijer_g(slater): m = 0 has no residue expansion", g.describe());
    }
    const PoleFamilies pf = group_poles(g);
    MeijerGResult res = residue_sum_as<ld>(g, pf, log_prefactor);
    if (res.abs_error > kQuadRetryRel * std::fabs(res.value)) {
        MeijerGResult hi = residue_sum_as<quad>(g, pf, log_prefactor);
        hi.terms += res.terms;
        return hi;
    }
    return res;
}

// --- contour ---------------------------------------------------------------

// Real upper bound of log|integrand| on the real axis; |sin| factors of
// reciprocal gammas at negative arguments are dropped.
inline double log_integrand_bound(const std::vector<GammaFactor>& factors, double lnz, double s) {
    double h = s * lnz;
    for (const GammaFactor& f : factors) {
        const double w = static_cast<double>(f.c) + f.sigma * s;
        if (f.power > 0) {
            if (!(w > 0.0)) return std::numeric_limits<double>::infinity();
            h += std::lgamma(w);
        } else if (w > 0.0) {
            h -= std::lgamma(w);
        } else {
            h += std::lgamma(1.0 - w) - std::log(std::numbers::pi);
        }
    }
    return h;
}

inline std::complex<double> log_integrand(const std::vector<GammaFactor>& factors, double lnz,
                                          std::complex<double> s) {
    std::complex<double> acc = s * lnz;
    for (const GammaFactor& f : factors) {
        const std::complex<double> w = static_cast<double>(f.c) + static_cast<double>(f.sigma) * s;
        acc += static_cast<double>(f.power) * ln_gamma(w);
    }
    return acc;
}

inline MeijerGResult contour_integral(const MeijerGSpec& g, double log_prefactor) {
    const double delta = g.m + g.n - 0.5 * (g.p() + g.q());
    if (!(delta > 0.0)) {
        throw EvaluationError("meijer_g(contour): integrand does not decay on a vertical line",
                              g.describe());
    }
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.n; ++j) lo = std::max(lo, g.a[j] - 1.0);
    for (int j = 0; j < g.m; ++j) hi = std::min(hi, g.b[j]);
    if (!(lo < hi)) {
        throw EvaluationError("meijer_g(contour): pole families interleave, no separating line",
                              g.describe());
    }
    const std::vector<GammaFactor> factors = integrand_factors(g);
    const double lnz = std::log(g.z);
    auto h = [&](double c) { return log_integrand_bound(factors, lnz, c); };

    // finite search window
    double wl = lo;
    double wr = hi;
    if (!std::isfinite(wl) && !std::isfinite(wr)) {
        wl = -10.0;
        wr = 10.0;
    } else if (!std::isfinite(wl)) {
        wl = wr - 10.0;
    } else if (!std::isfinite(wr)) {
        wr = wl + 10.0;
    }
    double best_c = 0.5 * (wl + wr);
    double best_h = std::numeric_limits<double>::infinity();
    for (int expand = 0; expand < 12; ++expand) {
        constexpr int kGrid = 48;
        const double width = wr - wl;
        int best_i = -1;
        for (int i = 1; i < kGrid; ++i) {
            const double c = wl + width * i / kGrid;
            const double v = h(c);
            if (v < best_h) {
                best_h = v;
                best_c = c;
                best_i = i;
            }
        }
        const bool at_left = best_i == 1 && !std::isfinite(lo);
        const bool at_right = best_i == kGrid - 1 && !std::isfinite(hi);
        if (at_left) {
            wl -= 2.0 * width;
        } else if (at_right) {
            wr += 2.0 * width;
        } else {
            // golden refinement around the best grid point
            double x0 = std::max(wl, best_c - width / kGrid);
            double x3 = std::min(wr, best_c + width / kGrid);
            const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
            double x1 = x3 - gr * (x3 - x0);
            double x2 = x0 + gr * (x3 - x0);
            double f1 = h(x1);
            double f2 = h(x2);
            for (int it = 0; it < 60; ++it) {
                if (f1 < f2) {
                    x3 = x2; x2 = x1; f2 = f1;
                    x1 = x3 - gr * (x3 - x0);
                    f1 = h(x1);
                } else {
                    x0 = x1; x1 = x2; f1 = f2;
                    x2 = x0 + gr * (x3 - x0);
                    f2 = h(x2);
                }
            }
            const double c = 0.5 * (x1 + x2);
            const double v = h(c);
            if (v < best_h) {
                best_h = v;
                best_c = c;
            }
            break;
        }
    }
    if (!std::isfinite(best_h)) {
        throw EvaluationError("meijer_g(contour): could not place the contour", g.describe());
    }
    if (best_h + log_prefactor < -745.0) {
        return MeijerGResult{0.0, std::exp(best_h + log_prefactor), GStrategy::contour, 0};
    }

    const double c = best_c;
    int evals = 0;
    auto f = [&](double y) {
        ++evals;
        const std::complex<double> l = log_integrand(factors, lnz, {c, y}) - best_h;
        return std::exp(l.real()) * std::cos(l.imag());
    };
    auto mag = [&](double y) {
        return std::exp((log_integrand(factors, lnz, {c, y}) - best_h).real());
    };
    double peak = mag(0.0);
    double Y = 1.0;
    for (int i = 0; i < 40; ++i) {
        const double m1 = mag(Y);
        const double m2 = mag(0.5 * Y);
        peak = std::max({peak, m1, m2});
        if (m1 < 1e-18 * peak && m2 < 1e-9 * peak) break;
        Y *= 2.0;
    }
    double err = 0.0;
    double l1 = 0.0;
    const double integral =
        boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, Y, 20, 1e-13, &err, &l1);
    const double scale = std::exp(best_h + log_prefactor) / std::numbers::pi;
    MeijerGResult res;
    res.value = scale * integral;
    res.abs_error = scale * (err + 1e-15 * l1) + 1e-18 * peak * scale * Y;
    res.strategy = GStrategy::contour;
    res.terms = evals;
    return res;
}

inline bool residues_supported(const MeijerGSpec& g) {
    if (g.p() < g.q()) return g.m > 0;
    if (g.p() > g.q()) return g.n > 0;
    if (g.z < 1.0) return g.m > 0;
    if (g.z > 1.0) return g.n > 0;
    return false;
}

inline MeijerGResult slater(const MeijerGSpec& g, double log_prefactor) {
    if (!residues_supported(g)) {
        throw EvaluationError("meijer_g(slater): no convergent residue expansion for this shape",
                              g.describe());
    }
    if (g.p() > g.q() || (g.p() == g.q() && g.z > 1.0)) {
        return residue_sum(inverted(g), log_prefactor);
    }
    return residue_sum(g, log_prefactor);
}

} // namespace detail

/// Evaluate exp(log_prefactor) * G with full diagnostics. The prefactor lets
/// callers fold in large or tiny coefficients without overflowing G itself.
/// Under `automatic`, the residue sum is used when its error estimate meets
/// max(1e-12 |value|, abs_tol); otherwise the contour integral is computed
/// and the more accurate of the two returned.
inline MeijerGResult meijer_g_detailed(const MeijerGSpec& g, GStrategy strategy = GStrategy::automatic,
                                       double abs_tol = 0.0, double log_prefactor = 0.0) {
    g.validate();
    switch (strategy) {
    case GStrategy::slater:
        return detail::slater(g, log_prefactor);
    case GStrategy::contour:
        return detail::contour_integral(g, log_prefactor);
    case GStrategy::automatic:
        break;
    }
    MeijerGResult best;
    bool have = false;
    std::string why;
    if (detail::residues_supported(g)) {
        try {
            best = detail::slater(g, log_prefactor);
            have = true;
            if (best.abs_error <= std::max(1e-12 * std::fabs(best.value), abs_tol)) {
                return best;
            }
        } catch (const EvaluationError& e) {
            why = e.what();
        }
    }
    try {
        MeijerGResult alt = detail::contour_integral(g, log_prefactor);
        if (!have || alt.abs_error < best.abs_error) {
            best = alt;
        }
        have = true;
    } catch (const EvaluationError& e) {
        if (!have) {
            throw EvaluationError("meijer_g: no strategy succeeded",
                                  g.describe() + "; " + why + "; " + e.what());
        }
    }
    return best;
}

inline double meijer_g(const MeijerGSpec& g, GStrategy strategy = GStrategy::automatic) {
    return meijer_g_detailed(g, strategy).value;
}

inline double meijer_g_contour(const MeijerGSpec& g) {
    g.validate();
    return detail::contour_integral(g, 0.0).value;
}

} // namespace rfso
