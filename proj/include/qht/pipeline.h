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

#ifndef QHT_PIPELINE_H
#define QHT_PIPELINE_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qht/circuit.h"
#include "qht/error.h"
#include "qht/io.h"
#include "qht/resources.h"
#include "qht/signal_tensor.h"

namespace qht::pipeline {

inline constexpr int kSchemaVersion = 1;

/// Process exit codes used by the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,  // unexpected failure or a verification check did not hold
    kExitInput = 2,     // bad arguments or unreadable / malformed input
    kExitPostselection = 3,
    kExitResourceLimit = 4,
};

int exit_code_for(ErrorCode code);

struct RunConfig {
    std::string command;
    std::filesystem::path input;  // empty: use the bundled synthetic input where one exists
    std::optional<std::size_t> n;
    std::optional<std::size_t> d;
    QhtMode mode = QhtMode::Dynamic;
    std::uint64_t seed = 0;
    double tau = 0.5;
    double tolerance = 1e-9;
    double step = 0.01;
    std::filesystem::path out_dir = ".";
    bool timing = false;
    std::size_t window = 32;
    std::size_t max_trials = 1000;
    // resources
    std::size_t n_min = 4;
    std::size_t n_max = 12;
    std::size_t d_min = 1;
    std::size_t d_max = 3;
    std::size_t components = 0;
};

struct Check {
    std::string name;
    bool passed = false;
};

struct RunReport {
    std::string command;
    std::string input_source;
    std::optional<std::string> input_sha256;
    std::size_t n = 0;
    std::size_t d = 0;
    QhtMode mode = QhtMode::Dynamic;
    std::uint64_t seed = 0;
    std::optional<double> fidelity;
    std::optional<double> success_probability;
    std::optional<double> dc_fraction;
    std::optional<double> max_abs_error;
    std::optional<double> input_norm;
    std::optional<double> output_scale;
    std::optional<std::size_t> sampled_trials;
    std::optional<ResourceReport> resources;
    std::map<std::string, std::string> artifacts;
    std::vector<std::string> warnings;
    std::vector<Check> checks;
    nlohmann::json details = nlohmann::json::object();
    std::optional<double> wall_time_s;
    std::string text;  // human-readable summary, not part of the JSON

    bool passed() const;
    nlohmann::json to_json() const;
};

nlohmann::json resource_to_json(const ResourceReport &r);

// Signal helpers shared by the commands and their tests.

/// Carrier of 16 cycles over 1024 samples with decaying bursts starting at
/// samples 300 and 700.
std::vector<double> synthetic_fault_signal();
inline constexpr std::size_t kSyntheticFaults[] = {300, 700};

struct Window {
    std::size_t begin = 0;
    std::size_t end = 0;  // exclusive
    double score = 0;
    bool contains(std::size_t i) const {
        return i >= begin && i < end;
    }
};

/// Top non-overlapping windows of summed |ia - median(ia)|.
std::vector<Window> deviation_windows(const std::vector<double> &ia, std::size_t count, std::size_t width);

/// side x side board of squares x squares cells, 255 where the cell parity is even.
io::PgmImage chessboard(std::size_t side, std::size_t squares);

/// Pixel / maxval, row-major, as a d = 2 tensor. Throws NonSquareImage,
/// NonPowerOfTwoSide, or QubitCountOutOfRange past 1024 pixels per side.
SignalTensor image_tensor(const io::PgmImage &image);

/// Pixels that are at least tau * max and no smaller than any of their eight
/// neighbours (periodic wrap), with slack 1e-9 * max on both comparisons.
/// Returned as row-major flat indices, ascending.
std::vector<std::size_t> find_corners(const std::vector<double> &magnitude, std::size_t side, double tau);

/// Number of 8-connected groups (periodic wrap) among the given pixels.
std::size_t count_clusters(const std::vector<std::size_t> &pixels, std::size_t side);

RunReport cmd_analytic(const RunConfig &config);
RunReport cmd_envelope(const RunConfig &config);
RunReport cmd_corners(const RunConfig &config);
RunReport cmd_resources(const RunConfig &config);
RunReport cmd_transform(const RunConfig &config);

/// Dispatches on config.command, writes <out>/<command>.json, and returns the report.
RunReport run_command(const RunConfig &config);

}  // namespace qht::pipeline

#endif
