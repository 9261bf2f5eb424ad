// Copyright 2026 The QHT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "qht/error.h"
#include "qht/pipeline.h"

namespace {

using qht::pipeline::RunConfig;

void add_common(CLI::App *cmd, RunConfig &config, std::string &mode) {
    cmd->add_option("--n", config.n, "Qubits per register (side 2^n)");
    cmd->add_option("--mode", mode, "DC removal layout")
        ->check(CLI::IsMember({"dynamic", "static"}))
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "Seed for the sampled run")->capture_default_str();
    cmd->add_option("--out", config.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--tolerance", config.tolerance, "Allowed 1 - fidelity and rowwise error")->capture_default_str();
    cmd->add_option("--max-trials", config.max_trials, "Cap on repeat-until-success trials")->capture_default_str();
    cmd->add_flag("--timing", config.timing, "Record wall time in the report");
}

const char *kHint =
    "hint: the input has all of its spectral mass on DC bins (e.g. constant along an axis), "
    "so nothing survives the DC removal";

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum Hilbert transform on a statevector simulator"};
    app.require_subcommand(1);
    RunConfig config;
    std::string mode = "dynamic";

    auto *analytic = app.add_subcommand("analytic", "Transform sin(x)/(1+x^4) and compare with FFT and closed form");
    add_common(analytic, config, mode);
    analytic->add_option("--step", config.step, "Grid spacing h")->capture_default_str();

    auto *envelope = app.add_subcommand("envelope", "Instantaneous amplitude of a CSV signal");
    add_common(envelope, config, mode);
    envelope->add_option("--input", config.input, "CSV signal; omit for the bundled two-fault signal");
    envelope->add_option("--window", config.window, "Deviation window width")->capture_default_str();

    auto *corners = app.add_subcommand("corners", "Corner detection on a square PGM image");
    add_common(corners, config, mode);
    corners->add_option("--input", config.input, "PGM image; omit for a generated 8x8 chessboard");
    corners->add_option("--tau", config.tau, "Relative corner threshold in (0,1]")->capture_default_str();

    auto *resources = app.add_subcommand("resources", "Gate counts, depth and classical cost model");
    add_common(resources, config, mode);
    resources->add_option("--d", config.d, "Single tensor order (overrides --d-min/--d-max)");
    resources->add_option("--n-min", config.n_min)->capture_default_str();
    resources->add_option("--n-max", config.n_max)->capture_default_str();
    resources->add_option("--d-min", config.d_min)->capture_default_str();
    resources->add_option("--d-max", config.d_max)->capture_default_str();
    resources->add_option("--components", config.components, "Output components k for the direct-sum model")
        ->capture_default_str();

    auto *transform = app.add_subcommand("transform", "Transform a CSV signal (d=1) or PGM image (d=2)");
    add_common(transform, config, mode);
    transform->add_option("--input", config.input, "CSV or PGM file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? qht::pipeline::kExitOk : qht::pipeline::kExitInput;
    }
    config.command = app.get_subcommands().front()->get_name();
    config.mode = mode == "static" ? qht::QhtMode::Static : qht::QhtMode::Dynamic;

    try {
        const auto report = qht::pipeline::run_command(config);
        std::cout << report.text;
        for (const auto &w : report.warnings) {
            std::cerr << "warning: " << w << "\n";
        }
        std::cout << "report: " << report.artifacts.at("report") << "\n";
        if (!report.passed()) {
            for (const auto &c : report.checks) {
                if (!c.passed) {
                    std::cerr << "check failed: " << c.name << "\n";
                }
            }
            return qht::pipeline::kExitInternal;
        }
        return qht::pipeline::kExitOk;
    } catch (const qht::QhtError &e) {
        std::cerr << "error: " << e.what() << "\n";
        if (e.code() == qht::ErrorCode::PostselectionImpossible) {
            std::cerr << kHint << "\n";
        }
        return qht::pipeline::exit_code_for(e.code());
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return qht::pipeline::kExitInternal;
    }
}
