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

// rfso: evaluate outage-probability scenarios and write CSV.
// Exit codes: 0 success, 1 evaluation error, 2 input error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "rfso/rfso.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kEvalError = 1;
constexpr int kInputError = 2;

struct Overrides {
    std::string method;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> workers;
};

void add_overrides(CLI::App* cmd, Overrides& o, bool with_method) {
    if (with_method) {
        cmd->add_option("--method", o.method,
                        "exact|gg|single|quadrature|mc|floor-mu1|floor-mu2|floor-mu1-app|all "
                        "(default: the scenario's methods list)");
    }
    cmd->add_option("--samples", o.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Monte Carlo seed");
    cmd->add_option("--workers", o.workers, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
}

rfso::RunOptions make_options(const rfso::ScenarioFile& f, const Overrides& o) {
    rfso::RunOptions opt;
    if (!o.method.empty()) {
        if (o.method == "all") {
            opt.methods = rfso::all_methods();
        } else if (auto m = rfso::parse_method(o.method)) {
            opt.methods = {*m};
        } else {
            throw std::invalid_argument("unknown method '" + o.method + "'");
        }
    }
    opt.mc = f.mc;
    if (o.samples) opt.mc.n_samples = *o.samples;
    if (o.seed) opt.mc.seed = *o.seed;
    unsigned w = o.workers ? *o.workers : f.mc.workers;
    if (w == 0) w = std::max(1u, std::thread::hardware_concurrency());
    opt.workers = w;
    return opt;
}

int run_and_write(const rfso::ScenarioFile& f, const rfso::RunOptions& opt, const std::string& out_path) {
    const rfso::SweepReport report = rfso::run_sweep(f, opt);
    for (const auto& n : report.notes) std::cerr << "note: " << n << "\n";
    if (report.rows.empty()) {
        std::cerr << "error: no applicable (scenario, method) combinations\n";
        return kInputError;
    }
    if (out_path.empty() || out_path == "-") {
        rfso::write_csv(std::cout, report.rows);
    } else {
        rfso::write_csv_file(out_path, report.rows);
    }
    int failed = 0;
    for (const auto& r : report.rows) {
        if (!r.ok) {
            ++failed;
            std::cerr << "error: " << r.scenario_id << " " << r.sweep_var << "=" << rfso::format_double(r.sweep_value)
                      << " " << rfso::to_string(r.method) << ": " << r.diagnostics << "\n";
        }
    }
    return failed ? kEvalError : kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outage probability of mixed RF/FSO relaying with partial relay selection"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_path;
    Overrides run_o;
    auto* run = app.add_subcommand("run", "evaluate a scenario file and write CSV");
    run->add_option("--scenario", scenario_path, "scenario file")->required();
    run->add_option("--out", out_path, "output CSV (default: stdout)");
    add_overrides(run, run_o, true);

    std::string preset_name;
    std::string preset_dir;
    Overrides preset_o;
    auto* preset = app.add_subcommand("preset", "run a built-in figure preset into a directory");
    preset->add_option("name", preset_name, "fig2..fig7")->required();
    preset->add_option("--out", preset_dir, "output directory")->required();
    add_overrides(preset, preset_o, true);

    std::string validate_path;
    bool emit = false;
    auto* validate = app.add_subcommand("validate", "check a scenario file and report every problem");
    validate->add_option("--scenario", validate_path, "scenario file")->required();
    validate->add_flag("--emit", emit, "print the canonical form of the scenario");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*run) {
            const rfso::ScenarioFile f = rfso::load_scenario(scenario_path);
            return run_and_write(f, make_options(f, run_o), out_path);
        }
        if (*preset) {
            const rfso::ScenarioFile f = rfso::load_preset(preset_name);
            const std::filesystem::path dir(preset_dir);
            std::filesystem::create_directories(dir);
            {
                std::ofstream scn(dir / (preset_name + ".scn"));
                scn << rfso::preset_text(preset_name);
            }
            return run_and_write(f, make_options(f, preset_o), (dir / (preset_name + ".csv")).string());
        }
        if (*validate) {
            const rfso::ScenarioFile f = rfso::load_scenario(validate_path);
            for (const auto& w : f.warnings) std::cerr << "warning: " << w << "\n";
            if (emit) {
                std::cout << rfso::emit_scenario(f);
            } else {
                const auto curves = f.expanded();
                std::size_t points = f.sweep ? f.sweep->values().size() : 1;
                std::cout << "ok: " << f.id << ", " << curves.size() << " curve(s), " << points << " point(s), "
                          << f.methods.size() << " method(s)\n";
            }
            return kOk;
        }
    } catch (const rfso::ScenarioParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kEvalError;
    }
    return kInputError;
}
