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

// Scenario files: flat "key = value" text with dotted sections.
//
//   id = demo                  # optional, defaults to the file stem
//   rf.mu1_db = 30             # dB aliases exist for mu1, mu2, gamma_th
//   rf.l = M                   # "M" keeps the best relay when M is swept
//   fso.sigma_s_over_a = 5     # resolved against fso.a
//   sweep.var = mu1_eq_mu2_db
//   sweep.start = 0
//   sweep.stop = 50
//   sweep.step = 5
//   methods = exact,mc
//   curve.strong.fso.rho_M = 0.1
//
// Each curve is the base scenario plus its overrides. All problems in a file
// are collected and reported together with their line numbers.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rfso/analytic.hpp"
#include "rfso/mcsim.hpp"

namespace rfso {

struct ParseIssue {
    int line = 0;  // 0 when the problem is not tied to a line
    std::string key;
    std::string message;
};

class ScenarioParseError : public std::runtime_error {
public:
    explicit ScenarioParseError(std::vector<ParseIssue> issues)
        : std::runtime_error(render(sorted(issues))), issues_(sorted(std::move(issues))) {}
    const std::vector<ParseIssue>& issues() const { return issues_; }

private:
    // by line, file-level problems last
    static std::vector<ParseIssue> sorted(std::vector<ParseIssue> v) {
        std::stable_sort(v.begin(), v.end(), [](const ParseIssue& a, const ParseIssue& b) {
            const long la = a.line > 0 ? a.line : 1L << 30;
            const long lb = b.line > 0 ? b.line : 1L << 30;
            return la < lb;
        });
        return v;
    }
    static std::string render(const std::vector<ParseIssue>& issues) {
        std::string out = std::to_string(issues.size()) + " problem(s) in scenario:";
        for (const auto& i : issues) {
            out += "\n  ";
            if (i.line > 0) out += "line " + std::to_string(i.line) + ": ";
            if (!i.key.empty()) out += i.key + ": ";
            out += i.message;
        }
        return out;
    }
    std::vector<ParseIssue> issues_;
};

/// Format a double so that parsing it back gives the same value.
inline std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

/// Ranked axis of a parameter sweep; SNRs in power dB.
struct SweepSpec {
    std::string variable;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    static const std::vector<std::string>& variables() {
        static const std::vector<std::string> v{"mu1_db", "mu2_db", "mu1_eq_mu2_db", "sigma_s", "M", "rho", "rho_M"};
        return v;
    }

    std::vector<std::string> problems() const {
        std::vector<std::string> out;
        const auto& v = variables();
        if (std::find(v.begin(), v.end(), variable) == v.end()) out.push_back("unknown sweep variable '" + variable + "'");
        if (!std::isfinite(start) || !std::isfinite(stop) || !(start <= stop)) out.push_back("start must not exceed stop");
        if (!(step > 0.0) || !std::isfinite(step)) out.push_back("step must be positive");
        if (variable == "M" && (start != std::round(start) || step != std::round(step))) {
            out.push_back("M sweeps need integer start and step");
        }
        return out;
    }

    void validate() const {
        const auto p = problems();
        if (!p.empty()) throw std::invalid_argument("sweep: " + p.front());
    }

    std::vector<double> values() const {
        validate();
        const auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        std::vector<double> out;
        out.reserve(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) out.push_back(start + static_cast<double>(i) * step);
        return out;
    }
};

/// One scenario plus the rule that ties the selected rank to the relay count.
struct CurveSpec {
    std::string name;  // empty for the base scenario
    Scenario scenario;
    bool l_is_M = false;
    std::vector<std::string> warnings;
};

struct ScenarioFile {
    std::string id = "scenario";
    CurveSpec base;
    std::vector<CurveSpec> curves;  // empty: the base alone is evaluated
    std::optional<SweepSpec> sweep;
    std::vector<Method> methods{Method::exact};
    McConfig mc;
    std::vector<std::string> warnings;

    /// Curves to evaluate, with scenario ids filled in.
    std::vector<CurveSpec> expanded() const {
        std::vector<CurveSpec> out = curves.empty() ? std::vector<CurveSpec>{base} : curves;
        for (auto& c : out) c.scenario.id = c.name.empty() ? id : id + "/" + c.name;
        return out;
    }
};

inline std::optional<Method> parse_method(std::string_view name) {
    std::string n(name);
    std::replace(n.begin(), n.end(), '-', '_');
    for (Method m : {Method::exact, Method::gg, Method::single, Method::floor_mu2, Method::floor_mu1,
                     Method::floor_mu1_app, Method::quadrature, Method::mc}) {
        if (n == to_string(m)) return m;
    }
    return std::nullopt;
}

inline std::vector<Method> all_methods() {
    return {Method::exact, Method::gg, Method::single, Method::quadrature,
            Method::mc, Method::floor_mu1, Method::floor_mu2, Method::floor_mu1_app};
}

/// Analytic paths need 1 - rho bounded away from zero.
inline constexpr double kRhoClamp = 0.999;

namespace detail {

inline std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

inline std::optional<double> to_double(const std::string& s) {
    double v = 0.0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

inline std::optional<long long> to_integer(const std::string& s) {
    long long v = 0;
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc() || r.ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// A settable scenario field. `set` returns an error message or empty.
struct Field {
    std::string key;
    std::function<std::string(const CurveSpec&)> get;
    std::function<std::string(CurveSpec&, const std::string&)> set;
};

inline Field real_field(std::string key, double& (*ref)(Scenario&), std::function<bool(double)> ok,
                        std::string rule) {
    Field f;
    f.key = key;
    f.get = [ref](const CurveSpec& c) { return format_double(ref(const_cast<Scenario&>(c.scenario))); };
    f.set = [ref, ok = std::move(ok), rule = std::move(rule)](CurveSpec& c, const std::string& v) -> std::string {
        const auto d = to_double(v);
        if (!d) return "expected a number, got '" + v + "'";
        if (!std::isfinite(*d) || !ok(*d)) return rule;
        ref(c.scenario) = *d;
        return {};
    };
    return f;
}

inline bool positive(double v) { return v > 0.0; }

inline const std::vector<Field>& scenario_fields() {
    static const std::vector<Field> fields = [] {
        std::vector<Field> f;
        f.push_back(real_field("gamma_th", [](Scenario& s) -> double& { return s.gamma_th; }, positive,
                               "must be positive"));
        f.push_back(real_field("rf.mu1", [](Scenario& s) -> double& { return s.rf.mu1; }, positive,
                               "must be positive"));
        f.push_back(real_field("rf.rho", [](Scenario& s) -> double& { return s.rf.rho; },
                               [](double v) { return v >= 0.0 && v <= 1.0; }, "must lie in [0, 1]"));
        f.push_back({"rf.M", [](const CurveSpec& c) { return std::to_string(c.scenario.rf.M); },
                     [](CurveSpec& c, const std::string& v) -> std::string {
                         const auto n = to_integer(v);
                         if (!n) return "expected an integer, got '" + v + "'";
                         if (*n < 1 || *n > 64) return "must lie in [1, 64]";
                         c.scenario.rf.M = static_cast<int>(*n);
                         if (c.l_is_M) c.scenario.rf.l = c.scenario.rf.M;
                         return {};
                     }});
        f.push_back({"rf.l",
                     [](const CurveSpec& c) { return c.l_is_M ? std::string("M") : std::to_string(c.scenario.rf.l); },
                     [](CurveSpec& c, const std::string& v) -> std::string {
                         if (v == "M") {
                             c.l_is_M = true;
                             c.scenario.rf.l = c.scenario.rf.M;
                             return {};
                         }
                         const auto n = to_integer(v);
                         if (!n) return "expected an integer or 'M', got '" + v + "'";
                         if (*n < 1) return "must be at least 1";
                         c.l_is_M = false;
                         c.scenario.rf.l = static_cast<int>(*n);
                         return {};
                     }});
        f.push_back(real_field("fso.mu2", [](Scenario& s) -> double& { return s.fso.mu2; }, positive,
                               "must be positive"));
        f.push_back(real_field("fso.alpha", [](Scenario& s) -> double& { return s.fso.malaga.alpha; }, positive,
                               "must be positive"));
        f.push_back(real_field("fso.beta", [](Scenario& s) -> double& { return s.fso.malaga.beta; },
                               [](double v) { return v >= 1.0 && v <= 1000.0 && v == std::round(v); },
                               "must be a positive integer"));
        f.push_back(real_field("fso.b0", [](Scenario& s) -> double& { return s.fso.malaga.b0; }, positive,
                               "must be positive"));
        f.push_back(real_field("fso.Omega", [](Scenario& s) -> double& { return s.fso.malaga.Omega; }, positive,
                               "must be positive"));
        f.push_back(real_field("fso.rho_M", [](Scenario& s) -> double& { return s.fso.malaga.rho_M; },
                               [](double v) { return v >= 0.0 && v <= 1.0; }, "must lie in [0, 1]"));
        f.push_back(real_field("fso.phi_AB", [](Scenario& s) -> double& { return s.fso.malaga.phi_AB; },
                               [](double) { return true; }, "must be finite"));
        f.push_back(real_field("fso.wavelength", [](Scenario& s) -> double& { return s.fso.geometry.wavelength; },
                               positive, "must be positive"));
        f.push_back(real_field("fso.distance", [](Scenario& s) -> double& { return s.fso.geometry.distance; },
                               positive, "must be positive"));
        f.push_back(real_field("fso.cn2", [](Scenario& s) -> double& { return s.fso.geometry.cn2; }, positive,
                               "must be positive"));
        f.push_back(real_field("fso.chi", [](Scenario& s) -> double& { return s.fso.geometry.chi; },
                               [](double v) { return v >= 0.0; }, "must be non-negative"));
        f.push_back({"fso.sigma_R2",
                     [](const CurveSpec& c) {
                         const auto& o = c.scenario.fso.geometry.sigma_R2_override;
                         return o ? format_double(*o) : std::string("auto");
                     },
                     [](CurveSpec& c, const std::string& v) -> std::string {
                         if (v == "auto") {
                             c.scenario.fso.geometry.sigma_R2_override.reset();
                             return {};
                         }
                         const auto d = to_double(v);
                         if (!d) return "expected a number or 'auto', got '" + v + "'";
                         if (!(*d > 0.0) || !std::isfinite(*d)) return "must be positive";
                         c.scenario.fso.geometry.sigma_R2_override = *d;
                         return {};
                     }});
        f.push_back(real_field("fso.a", [](Scenario& s) -> double& { return s.fso.pointing.a; }, positive,
                               "must be positive"));
        f.push_back(real_field("fso.a0", [](Scenario& s) -> double& { return s.fso.pointing.a0; }, positive,
                               "must be positive"));
        f.push_back(real_field("fso.F0", [](Scenario& s) -> double& { return s.fso.pointing.F0; },
                               [](double v) { return v != 0.0; }, "must be nonzero"));
        f.push_back(real_field("fso.sigma_s", [](Scenario& s) -> double& { return s.fso.pointing.sigma_s; },
                               positive, "must be positive (zero jitter is not supported)"));
        f.push_back({"series.t_max", [](const CurveSpec& c) { return std::to_string(c.scenario.series.t_max); },
                     [](CurveSpec& c, const std::string& v) -> std::string {
                         const auto n = to_integer(v);
                         if (!n) return "expected an integer, got '" + v + "'";
                         if (*n < 1 || *n > 100000) return "must lie in [1, 100000]";
                         c.scenario.series.t_max = static_cast<int>(*n);
                         return {};
                     }});
        f.push_back(real_field("series.rel_tol", [](Scenario& s) -> double& { return s.series.rel_tol; },
                               [](double v) { return v > 0.0 && v < 1.0; }, "must lie in (0, 1)"));
        return f;
    }();
    return fields;
}

// Input-only spellings, resolved after the canonical keys.
struct Alias {
    std::string key;
    std::string canonical;
    std::function<std::string(CurveSpec&, double)> apply;
};

inline const std::vector<Alias>& scenario_aliases() {
    static const std::vector<Alias> aliases{
        {"gamma_th_db", "gamma_th",
         [](CurveSpec& c, double v) {
             c.scenario.gamma_th = db_to_linear(v);
             return std::string();
         }},
        {"rf.mu1_db", "rf.mu1",
         [](CurveSpec& c, double v) {
             c.scenario.rf.mu1 = db_to_linear(v);
             return std::string();
         }},
        {"fso.mu2_db", "fso.mu2",
         [](CurveSpec& c, double v) {
             c.scenario.fso.mu2 = db_to_linear(v);
             return std::string();
         }},
        {"fso.sigma_R", "fso.sigma_R2",
         [](CurveSpec& c, double v) {
             if (!(v > 0.0)) return std::string("must be positive");
             c.scenario.fso.geometry.sigma_R2_override = v * v;
             return std::string();
         }},
        {"fso.sigma_s_over_a", "fso.sigma_s",
         [](CurveSpec& c, double v) {
             if (!(v > 0.0)) return std::string("must be positive (zero jitter is not supported)");
             c.scenario.fso.pointing.sigma_s = v * c.scenario.fso.pointing.a;
             return std::string();
         }},
    };
    return aliases;
}

struct Entry {
    std::string value;
    int line = 0;
};

using EntryMap = std::map<std::string, Entry>;

// Apply canonical keys then aliases to `c`; consumed keys are erased.
inline void apply_scenario_keys(CurveSpec& c, EntryMap& entries, const std::string& prefix,
                                std::vector<ParseIssue>& issues) {
    for (const Field& f : scenario_fields()) {
        auto it = entries.find(f.key);
        if (it == entries.end()) continue;
        if (std::string err = f.set(c, it->second.value); !err.empty()) {
            issues.push_back({it->second.line, prefix + f.key, err});
        }
    }
    for (const Alias& a : scenario_aliases()) {
        auto it = entries.find(a.key);
        if (it == entries.end()) continue;
        if (auto canon = entries.find(a.canonical); canon != entries.end()) {
            issues.push_back({it->second.line, prefix + a.key,
                              "conflicts with " + prefix + a.canonical + " on line " + std::to_string(canon->second.line)});
            continue;
        }
        const auto d = to_double(it->second.value);
        if (!d || !std::isfinite(*d)) {
            issues.push_back({it->second.line, prefix + a.key, "expected a number, got '" + it->second.value + "'"});
            continue;
        }
        if (std::string err = a.apply(c, *d); !err.empty()) issues.push_back({it->second.line, prefix + a.key, err});
    }
    for (const Field& f : scenario_fields()) entries.erase(f.key);
    for (const Alias& a : scenario_aliases()) entries.erase(a.key);
}

// Cross-field rules and the rho clamp for a fully assembled curve.
inline void finish_curve(CurveSpec& c, const EntryMap& seen, const std::string& prefix,
                         std::vector<ParseIssue>& issues) {
    auto line_of = [&](const std::string& key) {
        auto it = seen.find(key);
        return it == seen.end() ? 0 : it->second.line;
    };
    if (c.l_is_M) c.scenario.rf.l = c.scenario.rf.M;
    if (c.scenario.rf.l > c.scenario.rf.M) {
        issues.push_back({line_of("rf.l"), prefix + "rf.l",
                          "must not exceed rf.M (" + std::to_string(c.scenario.rf.M) + ")"});
    }
    if (c.scenario.rf.rho > kRhoClamp) {
        c.warnings.push_back(prefix + "rf.rho = " + format_double(c.scenario.rf.rho) + " clamped to " +
                             format_double(kRhoClamp) + " for analytic methods");
        c.scenario.rf.rho = kRhoClamp;
    }
    try {
        c.scenario.validate();
    } catch (const std::exception& e) {
        if (issues.empty()) issues.push_back({0, prefix.empty() ? "scenario" : prefix, e.what()});
    }
}

} // namespace detail

/// Parse scenario text. `default_id` names the scenario when `id` is absent.
inline ScenarioFile parse_scenario(std::string_view text, const std::string& default_id = "scenario") {
    using detail::Entry;
    using detail::EntryMap;
    std::vector<ParseIssue> issues;
    EntryMap top;
    std::map<std::string, EntryMap> curve_entries;
    std::vector<std::string> curve_order;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        const std::string line = detail::trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            issues.push_back({line_no, "", "expected 'key = value', got '" + line + "'"});
            continue;
        }
        const std::string key = detail::trim(std::string_view(line).substr(0, eq));
        const std::string value = detail::trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) {
            issues.push_back({line_no, "", "missing key before '='"});
            continue;
        }
        EntryMap* target = &top;
        std::string local = key;
        if (key.rfind("curve.", 0) == 0) {
            const auto dot = key.find('.', 6);
            const std::string name = dot == std::string::npos ? "" : key.substr(6, dot - 6);
            const bool valid_name = !name.empty() && std::all_of(name.begin(), name.end(), [](char ch) {
                return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-';
            });
            if (!valid_name || dot + 1 >= key.size()) {
                issues.push_back({line_no, key, "curve keys look like curve.<name>.<key>"});
                continue;
            }
            if (!curve_entries.count(name)) curve_order.push_back(name);
            target = &curve_entries[name];
            local = key.substr(dot + 1);
        }
        if (auto it = target->find(local); it != target->end()) {
            issues.push_back({line_no, key, "duplicate key (first set on line " + std::to_string(it->second.line) + ")"});
            continue;
        }
        (*target)[local] = Entry{value, line_no};
    }

    ScenarioFile file;
    file.id = default_id;
    const EntryMap all_top = top;

    if (auto it = top.find("id"); it != top.end()) {
        if (it->second.value.empty() || it->second.value.find_first_of(", \t\"") != std::string::npos) {
            issues.push_back({it->second.line, "id", "must be non-empty without commas, quotes or spaces"});
        } else {
            file.id = it->second.value;
        }
        top.erase(it);
    }

    detail::apply_scenario_keys(file.base, top, "", issues);

    if (auto it = top.find("methods"); it != top.end()) {
        file.methods.clear();
        std::stringstream ss(it->second.value);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = detail::trim(item);
            if (item == "all") {
                file.methods = all_methods();
                break;
            }
            if (auto m = parse_method(item)) {
                file.methods.push_back(*m);
            } else {
                issues.push_back({it->second.line, "methods", "unknown method '" + item + "'"});
            }
        }
        if (file.methods.empty()) issues.push_back({it->second.line, "methods", "no methods listed"});
        top.erase(it);
    }

    auto take_uint = [&](const char* key, std::uint64_t& dst, std::uint64_t lo) {
        auto it = top.find(key);
        if (it == top.end()) return;
        const auto n = detail::to_integer(it->second.value);
        if (!n || *n < static_cast<long long>(lo)) {
            issues.push_back({it->second.line, key, "expected an integer >= " + std::to_string(lo)});
        } else {
            dst = static_cast<std::uint64_t>(*n);
        }
        top.erase(it);
    };
    take_uint("mc.samples", file.mc.n_samples, 1);
    take_uint("mc.seed", file.mc.seed, 0);
    take_uint("mc.batch", file.mc.batch, 1);
    std::uint64_t workers = file.mc.workers;
    take_uint("mc.workers", workers, 0);
    file.mc.workers = static_cast<unsigned>(workers);

    const bool any_sweep = top.count("sweep.var") || top.count("sweep.start") || top.count("sweep.stop") ||
                           top.count("sweep.step");
    if (any_sweep) {
        SweepSpec sw;
        bool complete = true;
        for (const char* key : {"sweep.var", "sweep.start", "sweep.stop", "sweep.step"}) {
            if (!top.count(key)) {
                issues.push_back({0, key, "missing required key (sweeps need var, start, stop and step)"});
                complete = false;
            }
        }
        int sweep_line = 0;
        if (auto it = top.find("sweep.var"); it != top.end()) {
            sw.variable = it->second.value;
            sweep_line = it->second.line;
        }
        for (auto [key, dst] : {std::pair<const char*, double*>{"sweep.start", &sw.start},
                                {"sweep.stop", &sw.stop}, {"sweep.step", &sw.step}}) {
            auto it = top.find(key);
            if (it == top.end()) continue;
            const auto d = detail::to_double(it->second.value);
            if (!d) {
                issues.push_back({it->second.line, key, "expected a number, got '" + it->second.value + "'"});
                complete = false;
            } else {
                *dst = *d;
            }
        }
        if (complete) {
            for (const auto& p : sw.problems()) issues.push_back({sweep_line, "sweep", p});
            file.sweep = sw;
        }
        for (const char* key : {"sweep.var", "sweep.start", "sweep.stop", "sweep.step"}) top.erase(key);
    }

    for (const auto& [key, entry] : top) issues.push_back({entry.line, key, "unknown key"});

    detail::finish_curve(file.base, all_top, "", issues);
    for (const auto& w : file.base.warnings) file.warnings.push_back(w);

    for (const std::string& name : curve_order) {
        EntryMap entries = curve_entries[name];
        const EntryMap seen = entries;
        CurveSpec c = file.base;
        c.warnings.clear();
        c.name = name;
        const std::string prefix = "curve." + name + ".";
        detail::apply_scenario_keys(c, entries, prefix, issues);
        for (const auto& [key, entry] : entries) issues.push_back({entry.line, prefix + key, "unknown curve key"});
        EntryMap lines = all_top;
        for (const auto& [k, e] : seen) lines[k] = e;
        detail::finish_curve(c, lines, prefix, issues);
        for (const auto& w : c.warnings) file.warnings.push_back(w);
        file.curves.push_back(std::move(c));
    }

    if (!issues.empty()) throw ScenarioParseError(std::move(issues));
    return file;
}

inline ScenarioFile load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ScenarioParseError({{0, "", "cannot open scenario file '" + path.string() + "'"}});
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario(buf.str(), path.stem().string());
}

/// Canonical text; parse_scenario(emit_scenario(f)) reproduces f.
inline std::string emit_scenario(const ScenarioFile& f) {
    std::ostringstream out;
    out << "id = " << f.id << "\n";
    for (const auto& field : detail::scenario_fields()) out << field.key << " = " << field.get(f.base) << "\n";
    out << "methods = ";
    for (std::size_t i = 0; i < f.methods.size(); ++i) out << (i ? "," : "") << to_string(f.methods[i]);
    out << "\n";
    out << "mc.samples = " << f.mc.n_samples << "\nmc.seed = " << f.mc.seed << "\nmc.batch = " << f.mc.batch
        << "\nmc.workers = " << f.mc.workers << "\n";
    if (f.sweep) {
        out << "sweep.var = " << f.sweep->variable << "\nsweep.start = " << format_double(f.sweep->start)
            << "\nsweep.stop = " << format_double(f.sweep->stop) << "\nsweep.step = " << format_double(f.sweep->step)
            << "\n";
    }
    for (const auto& c : f.curves) {
        bool any = false;
        for (const auto& field : detail::scenario_fields()) {
            const std::string v = field.get(c);
            if (v != field.get(f.base)) {
                out << "curve." << c.name << "." << field.key << " = " << v << "\n";
                any = true;
            }
        }
        // keep curves that match the base so the curve list survives
        if (!any) out << "curve." << c.name << ".rf.M = " << c.scenario.rf.M << "\n";
    }
    return out.str();
}

/// Set a sweep variable on a curve. Throws std::invalid_argument if the point is inadmissible.
inline void apply_sweep_value(CurveSpec& c, const std::string& variable, double v) {
    Scenario& s = c.scenario;
    if (variable == "mu1_db") {
        s.rf.mu1 = db_to_linear(v);
    } else if (variable == "mu2_db") {
        s.fso.mu2 = db_to_linear(v);
    } else if (variable == "mu1_eq_mu2_db") {
        s.rf.mu1 = db_to_linear(v);
        s.fso.mu2 = db_to_linear(v);
    } else if (variable == "sigma_s") {
        s.fso.pointing.sigma_s = v;
    } else if (variable == "M") {
        s.rf.M = static_cast<int>(std::lround(v));
        if (c.l_is_M) s.rf.l = s.rf.M;
    } else if (variable == "rho") {
        s.rf.rho = std::min(v, kRhoClamp);
    } else if (variable == "rho_M") {
        s.fso.malaga.rho_M = v;
    } else {
        throw std::invalid_argument("unknown sweep variable '" + variable + "'");
    }
    s.validate();
}

} // namespace rfso
