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

// Sweep execution and CSV output. Every (curve, sweep point, method) triple is
// one task; tasks run on a small pool and rows come back in task order.

#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rfso/analytic.hpp"
#include "rfso/error.hpp"
#include "rfso/mcsim.hpp"
#include "rfso/scenario.hpp"

namespace rfso {

struct ResultRow {
    std::string scenario_id;
    std::string sweep_var = "none";
    double sweep_value = std::numeric_limits<double>::quiet_NaN();
    double mu1_db = 0.0;
    double mu2_db = 0.0;
    Method method = Method::exact;
    double p_out = std::numeric_limits<double>::quiet_NaN();
    double uncertainty = std::numeric_limits<double>::quiet_NaN();
    long long work = 0;
    double wall_time_ms = 0.0;
    std::string diagnostics;
    bool ok = false;
};

struct RunOptions {
    std::vector<Method> methods;  // empty: use the scenario file's list
    McConfig mc;
    unsigned workers = 1;
    QuadratureControl quadrature;
};

struct SweepReport {
    std::vector<ResultRow> rows;
    std::vector<std::string> notes;  // skipped combinations and load warnings
    bool all_ok() const {
        for (const auto& r : rows) {
            if (!r.ok) return false;
        }
        return true;
    }
};

/// Whether a method's model assumptions hold for this scenario.
inline bool method_applicable(const Scenario& s, Method m, std::string* why = nullptr) {
    if (m == Method::gg && s.fso.malaga.rho_M != 1.0) {
        if (why) *why = "gg needs rho_M = 1";
        return false;
    }
    if (m == Method::single && (s.rf.M != 1 || s.rf.l != 1)) {
        if (why) *why = "single needs M = l = 1";
        return false;
    }
    return true;
}

inline OutageEstimate evaluate_method(const Scenario& s, Method m, const McConfig& mc,
                                      const QuadratureControl& qc = {}) {
    switch (m) {
    case Method::exact: return outage_exact(s);
    case Method::gg: return outage_gg(s);
    case Method::single: return outage_single_relay(s);
    case Method::floor_mu2: return outage_floor_mu2(s);
    case Method::floor_mu1: return outage_floor_mu1(s);
    case Method::floor_mu1_app: return outage_floor_mu1_first_term(s);
    case Method::quadrature: return outage_quadrature_oracle(s, qc);
    case Method::mc: return estimate_outage_mc(s, mc);
    }
    throw std::invalid_argument("unknown method");
}

namespace detail {

inline std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += "; ";
        out += p;
    }
    return out;
}

struct SweepTask {
    CurveSpec curve;
    std::string sweep_var;
    double sweep_value;
    Method method;
    std::string setup_error;  // inadmissible sweep point
};

inline ResultRow run_task(const SweepTask& t, const McConfig& mc, const QuadratureControl& qc) {
    ResultRow row;
    const Scenario& s = t.curve.scenario;
    row.scenario_id = s.id;
    row.sweep_var = t.sweep_var;
    row.sweep_value = t.sweep_value;
    row.mu1_db = linear_to_db(s.rf.mu1);
    row.mu2_db = linear_to_db(s.fso.mu2);
    row.method = t.method;
    if (!t.setup_error.empty()) {
        row.diagnostics = "error: " + t.setup_error;
        return row;
    }
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const OutageEstimate e = evaluate_method(s, t.method, mc, qc);
        row.p_out = e.p_out;
        row.uncertainty = e.uncertainty;
        row.work = e.work;
        row.diagnostics = join(e.warnings);
        row.ok = true;
    } catch (const EvaluationError& e) {
        row.diagnostics = std::string("error: ") + e.what();
        if (!e.diagnostic().empty()) row.diagnostics += " (" + e.diagnostic() + ")";
    } catch (const std::exception& e) {
        row.diagnostics = std::string("error: ") + e.what();
    }
    row.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

} // namespace detail

/// Evaluate every curve at every sweep point with every method.
inline SweepReport run_sweep(const ScenarioFile& file, const RunOptions& opt) {
    const std::vector<Method>& methods = opt.methods.empty() ? file.methods : opt.methods;
    SweepReport report;
    report.notes = file.warnings;
    std::vector<detail::SweepTask> tasks;
    const std::vector<double> points = file.sweep ? file.sweep->values() : std::vector<double>{std::nan("")};
    const std::string var = file.sweep ? file.sweep->variable : "none";
    for (const CurveSpec& base : file.expanded()) {
        for (double v : points) {
            CurveSpec c = base;
            std::string setup_error;
            if (file.sweep) {
                try {
                    apply_sweep_value(c, var, v);
                } catch (const std::exception& e) {
                    setup_error = e.what();
                }
            }
            for (Method m : methods) {
                std::string why;
                if (setup_error.empty() && !method_applicable(c.scenario, m, &why)) {
                    if (methods.size() > 1) {
                        report.notes.push_back(c.scenario.id + " at " + var + "=" + format_double(v) + ": skipped " +
                                               to_string(m) + " (" + why + ")");
                        continue;
                    }
                }
                tasks.push_back({c, var, v, m, setup_error});
            }
        }
    }

    const unsigned workers = std::max(1u, opt.workers);
    McConfig mc = opt.mc;
    mc.workers = tasks.size() >= workers ? 1u : workers;
    report.rows.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            report.rows[i] = detail::run_task(tasks[i], mc, opt.quadrature);
        }
    };
    const unsigned pool_size = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));
    if (pool_size <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < pool_size; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return report;
}

inline const char* csv_header() {
    return "scenario_id,sweep_var,sweep_value,mu1_db,mu2_db,method,p_out,uncertainty,work,wall_time_ms,diagnostics";
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline void write_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
    out << csv_header() << "\n";
    auto num = [](double v) { return std::isnan(v) ? std::string() : format_double(v); };
    for (const ResultRow& r : rows) {
        out << csv_escape(r.scenario_id) << ',' << r.sweep_var << ',' << num(r.sweep_value) << ','
            << format_double(r.mu1_db) << ',' << format_double(r.mu2_db) << ',' << to_string(r.method) << ','
            << num(r.p_out) << ',' << num(r.uncertainty) << ',' << r.work << ',' << format_double(r.wall_time_ms)
            << ',' << csv_escape(r.diagnostics) << "\n";
    }
}

/// Write through a temporary file and rename, so readers never see a partial CSV.
inline void write_csv_file(const std::filesystem::path& path, const std::vector<ResultRow>& rows) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        write_csv(out, rows);
        out.flush();
        if (!out) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

} // namespace rfso
