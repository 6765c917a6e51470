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

// Monte Carlo over the physical channel model. Samples are drawn in fixed
// batches and batch b always uses stream b, so the estimate depends on
// (seed, n_samples, batch) only and not on how batches land on threads.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "rfso/analytic.hpp"
#include "rfso/channel.hpp"
#include "rfso/rng.hpp"

namespace rfso {

struct McConfig {
    std::uint64_t n_samples = 10'000'000;
    std::uint64_t seed = 1;
    unsigned workers = 0;  // 0 = hardware concurrency
    std::uint64_t batch = 1u << 16;

    void validate() const {
        if (n_samples < 1) throw std::invalid_argument("mc n_samples must be at least 1");
        if (batch < 1) throw std::invalid_argument("mc batch must be at least 1");
    }
};

/// Irradiance X |U|^2 with X ~ Gamma(alpha) and a Gamma(beta)-shadowed coherent
/// field plus independent circular Gaussian scatter of power g. Mean g + Omega'.
template <class Rng>
double sample_malaga_irradiance(const MalagaParams& p, const MalagaDerived& d, Rng& rng) {
    std::gamma_distribution<double> large(p.alpha, 1.0 / p.alpha);
    std::gamma_distribution<double> shadow(double(d.beta), 1.0 / d.beta);
    const double x = large(rng);
    const double zeta = shadow(rng);
    const std::complex<double> coherent =
        std::sqrt(p.Omega) * std::polar(1.0, p.phi_AB) + std::sqrt(2.0 * p.b0 * p.rho_M);
    std::complex<double> u = std::sqrt(zeta) * coherent;
    if (d.g > 0.0) {
        std::normal_distribution<double> n(0.0, std::sqrt(d.g / 2.0));
        const double re = n(rng);
        const double im = n(rng);
        u += std::complex<double>(re, im);
    }
    return x * std::norm(u);
}

/// Pointing loss A0 exp(-2 r^2 / a_deq^2) with Rayleigh radial jitter; since
/// xi = a_deq / (2 sigma_s) this is A0 exp(-E / xi^2), E ~ Exp(1).
template <class Rng>
double sample_pointing_loss(const PointingDerived& p, Rng& rng) {
    std::exponential_distribution<double> e(1.0);
    return p.A0 * std::exp(-e(rng) / (p.xi * p.xi));
}

/// (actual, estimated) SNR of the l-th worst of M relays ranked on outdated estimates.
template <class Rng>
std::pair<double, double> sample_prs_pair(const RfHopParams& rf, Rng& rng) {
    std::exponential_distribution<double> e(1.0);
    double est[64];
    std::vector<double> big;
    double* v = est;
    if (rf.M > 64) {
        big.resize(rf.M);
        v = big.data();
    }
    for (int k = 0; k < rf.M; ++k) v[k] = e(rng);
    std::nth_element(v, v + (rf.l - 1), v + rf.M);
    const double y = v[rf.l - 1];
    std::normal_distribution<double> n(0.0, std::sqrt(0.5));
    const double wr = n(rng);
    const double wi = n(rng);
    const double rho = rf.rho;
    double h2 = rho * y;
    if (rho < 1.0) {
        h2 += 2.0 * std::sqrt(rho * (1.0 - rho) * y) * wr + (1.0 - rho) * (wr * wr + wi * wi);
    }
    return {h2 * rf.mu1, y * rf.mu1};
}

namespace detail {

struct McModel {
    RfHopParams rf;
    MalagaParams mp;
    MalagaDerived md;
    PointingDerived pd;
    double mu2 = 0.0;
    double gamma_th = 0.0;
    double norm = 0.0;  // A0 kappa (g + Omega')
    std::complex<double> coherent;

    explicit McModel(const Scenario& s)
        : rf(s.rf), mp(s.fso.malaga), md(derive_malaga_constants(s.fso.malaga)),
          pd(derive_pointing(s.fso.pointing, s.fso.geometry)), mu2(s.fso.mu2), gamma_th(s.gamma_th),
          norm(pd.A0 * pd.kappa * (md.g + md.omega_prime)),
          coherent(std::sqrt(mp.Omega) * std::polar(1.0, mp.phi_AB) + std::sqrt(2.0 * mp.b0 * mp.rho_M)) {}
};

// Per-batch sampler. Distribution objects are hoisted out of the sample loop
// and rebuilt per batch so cached state never crosses a stream boundary.
class McBatch {
public:
    McBatch(const McModel& m, RngStream& rng)
        : m_(m), rng_(rng), large_(m.mp.alpha, 1.0 / m.mp.alpha), shadow_(double(m.md.beta), 1.0 / m.md.beta),
          scatter_(0.0, std::sqrt(std::max(m.md.g, 0.0) / 2.0)), half_(0.0, std::sqrt(0.5)),
          lambda_(static_cast<std::size_t>(m.rf.M)) {}

    bool outage() {
        const McModel& m = m_;
        for (int k = 0; k < m.rf.M; ++k) lambda_[k] = exp_(rng_);
        std::nth_element(lambda_.begin(), lambda_.begin() + (m.rf.l - 1), lambda_.end());
        const double y = lambda_[m.rf.l - 1];
        const double wr = half_(rng_);
        const double wi = half_(rng_);
        const double rho = m.rf.rho;
        double h2 = rho * y;
        if (rho < 1.0) h2 += 2.0 * std::sqrt(rho * (1.0 - rho) * y) * wr + (1.0 - rho) * (wr * wr + wi * wi);
        const double g1 = h2 * m.rf.mu1;
        const double g1_est = y * m.rf.mu1;

        const double x = large_(rng_);
        std::complex<double> u = std::sqrt(shadow_(rng_)) * m.coherent;
        if (m.md.g > 0.0) {
            const double re = scatter_(rng_);
            const double im = scatter_(rng_);
            u += std::complex<double>(re, im);
        }
        const double hp = m.pd.A0 * std::exp(-exp_(rng_) / (m.pd.xi * m.pd.xi));
        const double irr = x * std::norm(u) * hp / m.norm;
        const double g2 = m.mu2 * irr * irr;
        return g1 * g2 / (g2 + g1_est) < m.gamma_th;
    }

private:
    const McModel& m_;
    RngStream& rng_;
    std::gamma_distribution<double> large_;
    std::gamma_distribution<double> shadow_;
    std::normal_distribution<double> scatter_;
    std::normal_distribution<double> half_;
    std::exponential_distribution<double> exp_{1.0};
    std::vector<double> lambda_;
};

} // namespace detail

/// Plain Monte Carlo estimate of the outage probability.
inline OutageEstimate estimate_outage_mc(const Scenario& s, const McConfig& cfg) {
    s.validate();
    cfg.validate();
    const detail::McModel model(s);
    const std::uint64_t n = cfg.n_samples;
    const std::uint64_t batches = (n + cfg.batch - 1) / cfg.batch;
    std::vector<std::uint64_t> hits(batches, 0);
    std::atomic<std::uint64_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= batches) return;
            RngStream rng(cfg.seed, b);
            detail::McBatch sampler(model, rng);
            const std::uint64_t begin = b * cfg.batch;
            const std::uint64_t end = std::min(n, begin + cfg.batch);
            std::uint64_t h = 0;
            for (std::uint64_t i = begin; i < end; ++i) h += sampler.outage();
            hits[b] = h;
        }
    };
    unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, batches));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) total += h;

    OutageEstimate e;
    e.method = Method::mc;
    e.work = static_cast<long long>(n);
    const double p = static_cast<double>(total) / static_cast<double>(n);
    e.raw_value = p;
    e.p_out = p;
    e.uncertainty = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
    if (total < 10) {
        e.warnings.push_back("insufficient samples for target probability: " + std::to_string(total) +
                             " outage events in " + std::to_string(n) + " samples");
    }
    return e;
}

} // namespace rfso
