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

// Built-in scenario files for the six figure presets. Assumed values (relay
// count, some correlations and SNRs) are flagged inline.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rfso/scenario.hpp"

namespace rfso {

inline const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
    return names;
}

inline std::string_view preset_text(std::string_view name) {
    if (name == "fig2") {
        return R"(# Outage vs mu1 = mu2: best (l = M) and worst (l = 1) relay under three
# scattering regimes at sigma_R^2 = 0.36.
id = fig2
gamma_th_db = -10
rf.M = 3                      # assumed
rf.rho = 0.9                  # assumed; lower values invert the l ordering
fso.sigma_s_over_a = 1
methods = exact,mc,floor_mu2
mc.samples = 10000000
mc.seed = 2
sweep.var = mu1_eq_mu2_db
sweep.start = 0
sweep.stop = 40
sweep.step = 5
# (alpha, beta, rho_M) = (11, 4, 1): no off-axis scatter
curve.low_l1.fso.alpha = 11
curve.low_l1.fso.beta = 4
curve.low_l1.fso.rho_M = 1
curve.low_l1.rf.l = 1
curve.low_lM.fso.alpha = 11
curve.low_lM.fso.beta = 4
curve.low_lM.fso.rho_M = 1
curve.low_lM.rf.l = M
# (10, 5, 0.95)
curve.medium_l1.fso.alpha = 10
curve.medium_l1.fso.beta = 5
curve.medium_l1.fso.rho_M = 0.95
curve.medium_l1.rf.l = 1
curve.medium_lM.fso.alpha = 10
curve.medium_lM.fso.beta = 5
curve.medium_lM.fso.rho_M = 0.95
curve.medium_lM.rf.l = M
# (25, 10, 0.75)
curve.great_l1.fso.alpha = 25
curve.great_l1.fso.beta = 10
curve.great_l1.fso.rho_M = 0.75
curve.great_l1.rf.l = 1
curve.great_lM.fso.alpha = 25
curve.great_lM.fso.beta = 10
curve.great_lM.fso.rho_M = 0.75
curve.great_lM.rf.l = M
)";
    }
    if (name == "fig3") {
        return R"(# Outage vs mu1 for several correlations and two scattering regimes,
# with the mu1 -> infinity floor.
id = fig3
gamma_th_db = -10
rf.M = 3                      # assumed
rf.l = M
fso.mu2_db = 30               # assumed
fso.sigma_s_over_a = 1
methods = exact,mc,floor_mu1
mc.samples = 10000000
mc.seed = 3
sweep.var = mu1_db
sweep.start = 0
sweep.stop = 60
sweep.step = 10
curve.medium_rho01.fso.alpha = 10
curve.medium_rho01.fso.beta = 5
curve.medium_rho01.fso.rho_M = 0.95
curve.medium_rho01.rf.rho = 0.1
curve.medium_rho05.fso.alpha = 10
curve.medium_rho05.fso.beta = 5
curve.medium_rho05.fso.rho_M = 0.95
curve.medium_rho05.rf.rho = 0.5
curve.medium_rho09.fso.alpha = 10
curve.medium_rho09.fso.beta = 5
curve.medium_rho09.fso.rho_M = 0.95
curve.medium_rho09.rf.rho = 0.9
curve.great_rho01.fso.alpha = 25
curve.great_rho01.fso.beta = 10
curve.great_rho01.fso.rho_M = 0.75
curve.great_rho01.rf.rho = 0.1
curve.great_rho05.fso.alpha = 25
curve.great_rho05.fso.beta = 10
curve.great_rho05.fso.rho_M = 0.75
curve.great_rho05.rf.rho = 0.5
curve.great_rho09.fso.alpha = 25
curve.great_rho09.fso.beta = 10
curve.great_rho09.fso.rho_M = 0.75
curve.great_rho09.rf.rho = 0.9
)";
    }
    if (name == "fig4") {
        return R"(# Outage vs mu1 for several correlations in weak and strong turbulence
# (alpha = 8.1, beta = 4), with the first-term mu1 -> infinity floor.
# Turbulence strengths 0.52 (weak) and 1.2 (strong) are read as sigma_R^2,
# which Cn^2 reproduces; the *_sigmaR curves read them as sigma_R instead.
id = fig4
gamma_th_db = -10
rf.M = 3                      # assumed
rf.l = M
fso.mu2_db = 30               # assumed
fso.alpha = 8.1
fso.beta = 4
fso.sigma_s_over_a = 1
methods = exact,mc,floor_mu1,floor_mu1_app
mc.samples = 10000000
mc.seed = 4
sweep.var = mu1_db
sweep.start = 0
sweep.stop = 60
sweep.step = 10
curve.weak_rho01.fso.cn2 = 1.2e-14
curve.weak_rho01.fso.rho_M = 0.88
curve.weak_rho01.rf.rho = 0.1
curve.weak_rho05.fso.cn2 = 1.2e-14
curve.weak_rho05.fso.rho_M = 0.88
curve.weak_rho05.rf.rho = 0.5
curve.weak_rho09.fso.cn2 = 1.2e-14
curve.weak_rho09.fso.rho_M = 0.88
curve.weak_rho09.rf.rho = 0.9
curve.strong_rho01.fso.cn2 = 2.8e-14
curve.strong_rho01.fso.rho_M = 0.1
curve.strong_rho01.rf.rho = 0.1
curve.strong_rho05.fso.cn2 = 2.8e-14
curve.strong_rho05.fso.rho_M = 0.1
curve.strong_rho05.rf.rho = 0.5
curve.strong_rho09.fso.cn2 = 2.8e-14
curve.strong_rho09.fso.rho_M = 0.1
curve.strong_rho09.rf.rho = 0.9
curve.weak_sigmaR_rho05.fso.cn2 = 1.2e-14
curve.weak_sigmaR_rho05.fso.sigma_R = 0.52
curve.weak_sigmaR_rho05.fso.rho_M = 0.88
curve.weak_sigmaR_rho05.rf.rho = 0.5
curve.strong_sigmaR_rho05.fso.cn2 = 2.8e-14
curve.strong_sigmaR_rho05.fso.sigma_R = 1.2
curve.strong_sigmaR_rho05.fso.rho_M = 0.1
curve.strong_sigmaR_rho05.rf.rho = 0.5
)";
    }
    if (name == "fig5") {
        return R"(# Outage vs mu2 for two correlations and three jitter strengths,
# with the mu2 -> infinity floor (independent of the optical hop).
id = fig5
gamma_th_db = -10
rf.M = 3                      # assumed
rf.l = M
rf.mu1_db = 30                # assumed
fso.alpha = 10
fso.beta = 5
fso.rho_M = 0.95
methods = exact,mc,floor_mu2
mc.samples = 10000000
mc.seed = 5
sweep.var = mu2_db
sweep.start = 0
sweep.stop = 60
sweep.step = 10
curve.s1_rho01.fso.sigma_s_over_a = 1
curve.s1_rho01.rf.rho = 0.1
curve.s5_rho01.fso.sigma_s_over_a = 5
curve.s5_rho01.rf.rho = 0.1
curve.s6_rho01.fso.sigma_s_over_a = 6
curve.s6_rho01.rf.rho = 0.1
curve.s1_rho09.fso.sigma_s_over_a = 1
curve.s1_rho09.rf.rho = 0.9
curve.s5_rho09.fso.sigma_s_over_a = 5
curve.s5_rho09.rf.rho = 0.9
curve.s6_rho09.fso.sigma_s_over_a = 6
curve.s6_rho09.rf.rho = 0.9
)";
    }
    if (name == "fig6") {
        return R"(# Outage vs jitter standard deviation (metres; a = 5 cm) for two
# correlations in weak and strong turbulence.
id = fig6
gamma_th_db = -10
rf.M = 3                      # assumed
rf.l = M
rf.mu1_db = 30                # assumed
fso.mu2_db = 30               # assumed
fso.alpha = 8.1
fso.beta = 4
methods = exact,mc
mc.samples = 10000000
mc.seed = 6
sweep.var = sigma_s
sweep.start = 0.05
sweep.stop = 0.35
sweep.step = 0.05
curve.weak_rho01.fso.cn2 = 1.2e-14
curve.weak_rho01.fso.rho_M = 0.88
curve.weak_rho01.rf.rho = 0.1
curve.weak_rho09.fso.cn2 = 1.2e-14
curve.weak_rho09.fso.rho_M = 0.88
curve.weak_rho09.rf.rho = 0.9
curve.strong_rho01.fso.cn2 = 2.8e-14
curve.strong_rho01.fso.rho_M = 0.1
curve.strong_rho01.rf.rho = 0.1
curve.strong_rho09.fso.cn2 = 2.8e-14
curve.strong_rho09.fso.rho_M = 0.1
curve.strong_rho09.rf.rho = 0.9
)";
    }
    if (name == "fig7") {
        return R"(# Outage vs number of relays with the best relay selected, for benign
# and harmful optical-hop conditions.
id = fig7
gamma_th_db = -10
rf.l = M
rf.rho = 0.9                  # assumed
rf.mu1_db = 30                # assumed
fso.mu2_db = 30               # assumed
fso.alpha = 8.1
fso.beta = 4
methods = exact,mc
mc.samples = 10000000
mc.seed = 7
sweep.var = M
sweep.start = 1
sweep.stop = 5
sweep.step = 1
curve.weak_s1.fso.cn2 = 1.2e-14
curve.weak_s1.fso.rho_M = 0.88
curve.weak_s1.fso.sigma_s_over_a = 1
curve.strong_s1.fso.cn2 = 2.8e-14
curve.strong_s1.fso.rho_M = 0.1
curve.strong_s1.fso.sigma_s_over_a = 1
curve.weak_s6.fso.cn2 = 1.2e-14
curve.weak_s6.fso.rho_M = 0.88
curve.weak_s6.fso.sigma_s_over_a = 6
)";
    }
    throw std::invalid_argument("unknown preset '" + std::string(name) + "' (expected fig2..fig7)");
}

inline ScenarioFile load_preset(std::string_view name) {
    return parse_scenario(preset_text(name), std::string(name));
}

} // namespace rfso
