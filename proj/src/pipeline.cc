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

#include "qht/pipeline.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <iomanip>

#include "qht/classical.h"
#include "qht/error.h"
#include "qht/io.h"
#include "qht/qht.h"

namespace qht::pipeline {

namespace fs = std::filesystem;
using nlohmann::json;

int exit_code_for(ErrorCode code) {
    switch (code) {
        case ErrorCode::PostselectionImpossible:
            return kExitPostselection;
        case ErrorCode::QubitCountOutOfRange:
            return kExitResourceLimit;
        case ErrorCode::ZeroNorm:
        case ErrorCode::NonPowerOfTwoLength:
        case ErrorCode::ShapeMismatch:
        case ErrorCode::EmptyInput:
        case ErrorCode::NonNumericRow:
        case ErrorCode::BadPgmHeader:
        case ErrorCode::NonSquareImage:
        case ErrorCode::NonPowerOfTwoSide:
        case ErrorCode::Io:
            return kExitInput;
        default:
            return kExitInternal;
    }
}

bool RunReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.passed; });
}

json resource_to_json(const ResourceReport &r) {
    return json{{"n", r.n},
                {"d", r.d},
                {"mode", mode_name(r.mode)},
                {"count_1q", r.count_1q},
                {"count_2q", r.count_2q},
                {"total", r.total},
                {"depth", r.depth},
                {"qubits_used", r.qubits_used},
                {"scratch_qubits", r.scratch_qubits},
                {"measurements", r.measurements}};
}

namespace {

template <class T>
json optional_json(const std::optional<T> &v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

json RunReport::to_json() const {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = command;
    doc["input"] = {{"source", input_source}, {"sha256", optional_json(input_sha256)}};
    doc["config"] = {{"n", n}, {"d", d}, {"mode", mode_name(mode)}, {"seed", seed}};
    doc["fidelity"] = optional_json(fidelity);
    doc["success_probability"] = optional_json(success_probability);
    doc["dc_fraction"] = optional_json(dc_fraction);
    doc["max_abs_error"] = optional_json(max_abs_error);
    doc["scale"] = {{"input_norm", optional_json(input_norm)}, {"output_scale", optional_json(output_scale)}};
    doc["sampling"] = {{"seed", seed}, {"trials_until_success", optional_json(sampled_trials)}};
    doc["resources"] = resources ? resource_to_json(*resources) : json(nullptr);
    doc["artifacts"] = artifacts;
    doc["warnings"] = warnings;
    json check_list = json::array();
    for (const auto &c : checks) {
        check_list.push_back({{"name", c.name}, {"passed", c.passed}});
    }
    doc["checks"] = check_list;
    doc["passed"] = passed();
    doc["details"] = details;
    if (wall_time_s) {
        doc["wall_time_s"] = *wall_time_s;
    }
    return doc;
}

std::vector<double> synthetic_fault_signal() {
    constexpr std::size_t kLength = 1024;
    constexpr double kCycles = 16;
    std::vector<double> f(kLength);
    for (std::size_t k = 0; k < kLength; ++k) {
        f[k] = std::cos(2 * std::numbers::pi * kCycles * static_cast<double>(k) / kLength);
    }
    const double amplitudes[] = {1.5, 1.2};
    for (std::size_t b = 0; b < 2; ++b) {
        const std::size_t start = kSyntheticFaults[b];
        for (std::size_t j = 0; j < 24; ++j) {
            const double t = static_cast<double>(j);
            f[start + j] += amplitudes[b] * std::exp(-t / 6.0) * std::cos(2 * std::numbers::pi * 0.22 * t);
        }
    }
    return f;
}

std::vector<Window> deviation_windows(const std::vector<double> &ia, std::size_t count, std::size_t width) {
    if (ia.empty() || width == 0) {
        return {};
    }
    width = std::min(width, ia.size());
    std::vector<double> sorted = ia;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 2), sorted.end());
    const double median = sorted[sorted.size() / 2];

    const std::size_t starts = ia.size() - width + 1;
    std::vector<double> prefix(ia.size() + 1, 0.0);
    for (std::size_t i = 0; i < ia.size(); ++i) {
        prefix[i + 1] = prefix[i] + std::abs(ia[i] - median);
    }
    std::vector<bool> blocked(starts, false);
    std::vector<Window> out;
    while (out.size() < count) {
        std::optional<std::size_t> best;
        double best_score = -1;
        for (std::size_t s = 0; s < starts; ++s) {
            const double score = prefix[s + width] - prefix[s];
            if (!blocked[s] && score > best_score) {
                best_score = score;
                best = s;
            }
        }
        if (!best) {
            break;
        }
        out.push_back({*best, *best + width, best_score});
        const std::size_t lo = *best >= width ? *best - width + 1 : 0;
        const std::size_t hi = std::min(starts, *best + width);
        std::fill(blocked.begin() + static_cast<std::ptrdiff_t>(lo), blocked.begin() + static_cast<std::ptrdiff_t>(hi), true);
    }
    return out;
}

io::PgmImage chessboard(std::size_t side, std::size_t squares) {
    if (squares == 0 || side % squares != 0) {
        throw QhtError(ErrorCode::ShapeMismatch, "side must be a multiple of the square count");
    }
    const std::size_t cell = side / squares;
    io::PgmImage image;
    image.width = side;
    image.height = side;
    image.pixels.resize(side * side);
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            image.pixels[r * side + c] = ((r / cell + c / cell) % 2 == 0) ? 255 : 0;
        }
    }
    return image;
}

SignalTensor image_tensor(const io::PgmImage &image) {
    if (image.width != image.height) {
        throw QhtError(ErrorCode::NonSquareImage,
                       std::to_string(image.width) + "x" + std::to_string(image.height));
    }
    if (!std::has_single_bit(image.width) || image.width < 2) {
        throw QhtError(ErrorCode::NonPowerOfTwoSide, "side " + std::to_string(image.width));
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(image.width));
    if (n > 10) {
        throw QhtError(ErrorCode::QubitCountOutOfRange, "image side above 1024");
    }
    std::vector<double> values(image.pixels.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        values[i] = image.pixels[i] / static_cast<double>(image.maxval);
    }
    return SignalTensor::from_real(2, n, values);
}

std::vector<std::size_t> find_corners(const std::vector<double> &magnitude, std::size_t side, double tau) {
    if (magnitude.size() != side * side) {
        throw QhtError(ErrorCode::ShapeMismatch, "magnitude is not side x side");
    }
    const double peak = *std::max_element(magnitude.begin(), magnitude.end());
    const double slack = 1e-9 * peak;
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < side; ++r) {
        for (std::size_t c = 0; c < side; ++c) {
            const double v = magnitude[r * side + c];
            if (v < tau * peak - slack) {
                continue;
            }
            bool is_max = true;
            for (std::size_t dr = side - 1; dr <= side + 1 && is_max; ++dr) {
                for (std::size_t dc = side - 1; dc <= side + 1; ++dc) {
                    if (dr == side && dc == side) {
                        continue;
                    }
                    const std::size_t nr = (r + dr) % side;
                    const std::size_t nc = (c + dc) % side;
                    if (magnitude[nr * side + nc] > v + slack) {
                        is_max = false;
                        break;
                    }
                }
            }
            if (is_max) {
                out.push_back(r * side + c);
            }
        }
    }
    return out;
}

std::size_t count_clusters(const std::vector<std::size_t> &pixels, std::size_t side) {
    std::vector<bool> member(side * side, false);
    for (auto p : pixels) {
        member.at(p) = true;
    }
    std::vector<bool> seen(side * side, false);
    std::size_t clusters = 0;
    std::vector<std::size_t> stack;
    for (auto p : pixels) {
        if (seen[p]) {
            continue;
        }
        ++clusters;
        seen[p] = true;
        stack.push_back(p);
        while (!stack.empty()) {
            const std::size_t q = stack.back();
            stack.pop_back();
            const std::size_t r = q / side;
            const std::size_t c = q % side;
            for (std::size_t dr = side - 1; dr <= side + 1; ++dr) {
                for (std::size_t dc = side - 1; dc <= side + 1; ++dc) {
                    const std::size_t nq = ((r + dr) % side) * side + (c + dc) % side;
                    if (member[nq] && !seen[nq]) {
                        seen[nq] = true;
                        stack.push_back(nq);
                    }
                }
            }
        }
    }
    return clusters;
}

namespace {

std::string artifact_path(const RunConfig &config, const std::string &name) {
    return (config.out_dir / name).lexically_normal().generic_string();
}

void prepare_out_dir(const RunConfig &config) {
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec || !fs::is_directory(config.out_dir)) {
        throw QhtError(ErrorCode::Io, "cannot create output directory " + config.out_dir.string());
    }
}

std::string digest_of(std::string_view text) {
    return io::sha256_hex(std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t *>(text.data()), text.size()));
}

class CsvBuilder {
   public:
    explicit CsvBuilder(std::initializer_list<std::string_view> header) {
        bool first = true;
        for (auto h : header) {
            if (!first) {
                text_ += ',';
            }
            text_ += h;
            first = false;
        }
        text_ += '\n';
    }
    template <class... Ts>
    void row(const Ts &...values) {
        bool first = true;
        ((append(values, first)), ...);
        text_ += '\n';
    }
    const std::string &text() const {
        return text_;
    }

   private:
    void append(double v, bool &first) {
        sep(first);
        text_ += io::format_double(v);
    }
    void append(std::size_t v, bool &first) {
        sep(first);
        text_ += std::to_string(v);
    }
    void sep(bool &first) {
        if (!first) {
            text_ += ',';
        }
        first = false;
    }
    std::string text_;
};

struct TransformPair {
    SignalTensor quantum;    // de-normalized
    SignalTensor classical;
};

TransformPair run_both(const SignalTensor &f, const RunConfig &config, RunReport &report) {
    report.n = f.bits();
    report.d = f.dims();
    report.mode = config.mode;
    report.seed = config.seed;
    report.input_norm = f.frobenius_norm();

    const QhtResult result = run_qht(f, config.mode);
    TransformPair pair{result.denormalized(), dht_classical(f)};

    report.success_probability = result.success_probability;
    report.output_scale = result.output.scale();
    const double p = dc_fraction(f);
    report.dc_fraction = p;
    report.fidelity = fidelity(pair.quantum.data(), pair.classical.data());
    double err = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        err = std::max(err, std::abs(pair.quantum[i] - pair.classical[i]));
    }
    report.max_abs_error = err;

    try {
        report.sampled_trials = run_qht_sampled(f, config.mode, config.seed, config.max_trials).trials;
    } catch (const QhtError &e) {
        if (e.code() != ErrorCode::PostselectionImpossible) {
            throw;
        }
        report.warnings.push_back("sampled run found no success within " + std::to_string(config.max_trials) + " trials");
    }
    report.resources = estimate(f.bits(), f.dims(), config.mode);

    report.checks.push_back({"success_plus_dc_is_one", std::abs(result.success_probability + p - 1.0) <= 1e-9});
    report.checks.push_back({"fidelity_within_tolerance", *report.fidelity >= 1.0 - config.tolerance});
    return pair;
}

std::vector<double> fit_row(double x) {
    return {x * x, x, 1.0};
}

std::size_t resize_signal(std::vector<double> &values, const RunConfig &config, RunReport &report) {
    const std::size_t original = values.size();
    if (config.n) {
        if (*config.n == 0 || *config.n > 30) {
            throw QhtError(ErrorCode::QubitCountOutOfRange, "n must be in 1..30");
        }
        const std::size_t target = std::size_t{1} << *config.n;
        if (target != original) {
            values.resize(target, 0.0);
            report.warnings.push_back((target < original ? "truncated " : "zero-padded ") + std::to_string(original) +
                                      " samples to " + std::to_string(target));
        }
    } else if (io::pad_to_power_of_two(values) > 0) {
        report.warnings.push_back("zero-padded " + std::to_string(original) + " samples to " +
                                  std::to_string(values.size()));
    }
    return static_cast<std::size_t>(std::countr_zero(values.size()));
}

void require_input(const RunConfig &config) {
    if (!config.input.empty() && !fs::is_regular_file(config.input)) {
        throw QhtError(ErrorCode::Io, "input not found: " + config.input.string());
    }
}

}  // namespace

RunReport cmd_analytic(const RunConfig &config) {
    prepare_out_dir(config);
    RunReport report;
    report.command = "analytic";
    report.input_source = "analytic:sin(x)/(1+x^4)";
    const std::size_t n = config.n.value_or(7);
    check_qubit_count(n + 1);
    const std::size_t size = std::size_t{1} << n;
    const auto x = centered_grid(size, config.step);
    std::vector<double> f(size);
    std::vector<double> hf(size);
    for (std::size_t k = 0; k < size; ++k) {
        const auto pair = analytic_pair(x[k]);
        f[k] = pair.f;
        hf[k] = pair.hf;
    }
    const auto tensor = SignalTensor::from_real(1, n, f);
    const auto out = run_both(tensor, config, report);

    CsvBuilder csv({"x", "f", "hf_quantum", "hf_classical", "hf_analytic"});
    double rowwise = 0;
    double rms = 0;
    std::size_t interior = 0;
    for (std::size_t k = 0; k < size; ++k) {
        const double q = out.quantum[k].real();
        const double c = out.classical[k].real();
        csv.row(x[k], f[k], q, c, hf[k]);
        rowwise = std::max(rowwise, std::abs(q - c));
        if (std::abs(x[k]) <= 0.16 + 1e-12) {
            rms += (c - hf[k]) * (c - hf[k]);
            ++interior;
        }
    }
    bool odd = true;
    for (std::size_t k = 1; k < size / 2; ++k) {
        odd = odd && std::abs(f[size / 2 + k] + f[size / 2 - k]) <= 1e-15;
    }
    report.details = {{"step", config.step},
                      {"points", size},
                      {"rowwise_max_error", rowwise},
                      {"interior_rms_vs_analytic", interior ? std::sqrt(rms / static_cast<double>(interior)) : 0.0},
                      {"interior_points", interior}};
    report.checks.push_back({"rowwise_quantum_matches_classical", rowwise <= config.tolerance});
    report.checks.push_back({"f_odd_about_center", odd});
    const auto path = artifact_path(config, "analytic.csv");
    io::write_file_atomic(path, csv.text());
    report.artifacts["csv"] = path;
    std::ostringstream text;
    text << std::setprecision(17) << "analytic: N=" << size << " fidelity=" << *report.fidelity
         << " success=" << *report.success_probability << "\n";
    report.text = text.str();
    return report;
}

RunReport cmd_envelope(const RunConfig &config) {
    require_input(config);
    prepare_out_dir(config);
    RunReport report;
    report.command = "envelope";
    std::vector<double> values;
    std::vector<double> times;
    const bool synthetic = config.input.empty();
    if (synthetic) {
        values = synthetic_fault_signal();
        CsvBuilder csv({"# t", "value"});
        for (std::size_t k = 0; k < values.size(); ++k) {
            csv.row(k, values[k]);
        }
        report.input_source = "synthetic:two-fault";
        report.input_sha256 = digest_of(csv.text());
        const auto path = artifact_path(config, "envelope_input.csv");
        io::write_file_atomic(path, csv.text());
        report.artifacts["input"] = path;
    } else {
        const auto bytes = io::read_bytes(config.input);
        auto signal = io::parse_csv_signal(std::string_view(reinterpret_cast<const char *>(bytes.data()), bytes.size()));
        values = std::move(signal.values);
        times = std::move(signal.times);
        report.input_source = config.input.generic_string();
        report.input_sha256 = io::sha256_hex(bytes);
    }
    const std::size_t n = resize_signal(values, config, report);
    const auto tensor = SignalTensor::from_real(1, n, values);
    const auto out = run_both(tensor, config, report);

    const auto classical_ia = envelope(values);
    std::vector<double> quantum_ia(values.size());
    double err = 0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        const double h = out.quantum[k].real();
        quantum_ia[k] = std::sqrt(values[k] * values[k] + h * h);
        err = std::max(err, std::abs(quantum_ia[k] - classical_ia[k]));
    }
    const double dt = times.size() >= 2 ? times[1] - times[0] : 1.0;
    CsvBuilder csv({"t", "f", "IA_quantum", "IA_classical"});
    for (std::size_t k = 0; k < values.size(); ++k) {
        double t = static_cast<double>(k);
        if (!times.empty()) {
            t = k < times.size() ? times[k] : times.back() + dt * static_cast<double>(k + 1 - times.size());
        }
        csv.row(t, values[k], quantum_ia[k], classical_ia[k]);
    }
    const auto windows = deviation_windows(quantum_ia, 2, config.window);
    json window_list = json::array();
    for (const auto &w : windows) {
        window_list.push_back({{"begin", w.begin}, {"end", w.end}, {"score", w.score}});
    }
    report.details = {{"samples", values.size()}, {"ia_max_error", err}, {"window", config.window}, {"windows", window_list}};
    report.checks.push_back({"ia_quantum_matches_classical", err <= config.tolerance});
    if (synthetic) {
        json faults = json::array();
        bool covered = true;
        for (auto fault : kSyntheticFaults) {
            faults.push_back(fault);
            covered = covered && std::any_of(windows.begin(), windows.end(), [&](const Window &w) { return w.contains(fault); });
        }
        report.details["faults"] = faults;
        report.details["faults_covered"] = covered;
        report.checks.push_back({"fault_windows_cover_injected_faults", covered});
    }
    const auto path = artifact_path(config, "envelope.csv");
    io::write_file_atomic(path, csv.text());
    report.artifacts["csv"] = path;
    std::ostringstream text;
    text << std::setprecision(17) << "envelope: samples=" << values.size() << " fidelity=" << *report.fidelity;
    for (const auto &w : windows) {
        text << " window=[" << w.begin << "," << w.end << ")";
    }
    text << "\n";
    report.text = text.str();
    return report;
}

RunReport cmd_corners(const RunConfig &config) {
    require_input(config);
    prepare_out_dir(config);
    RunReport report;
    report.command = "corners";
    if (!(config.tau > 0 && config.tau <= 1)) {
        throw QhtError(ErrorCode::ShapeMismatch, "tau must be in (0, 1]");
    }
    io::PgmImage image;
    if (config.input.empty()) {
        const std::size_t n = config.n.value_or(8);
        if (n < 3 || n > 10) {
            throw QhtError(ErrorCode::QubitCountOutOfRange, "chessboard needs 3 <= n <= 10");
        }
        image = chessboard(std::size_t{1} << n, 8);
        const auto bytes = io::encode_pgm(image);
        report.input_source = "synthetic:chessboard-8x8";
        report.input_sha256 = io::sha256_hex(bytes);
        const auto path = artifact_path(config, "corners_input.pgm");
        io::write_file_atomic(path, bytes);
        report.artifacts["input"] = path;
    } else {
        const auto bytes = io::read_bytes(config.input);
        image = io::parse_pgm(bytes);
        report.input_source = config.input.generic_string();
        report.input_sha256 = io::sha256_hex(bytes);
    }
    const auto tensor = image_tensor(image);
    const auto out = run_both(tensor, config, report);
    const std::size_t side = tensor.side();

    const auto quantum_mag = out.quantum.magnitude();
    const auto classical_mag = out.classical.magnitude();
    const auto quantum_corners = find_corners(quantum_mag, side, config.tau);
    const auto classical_corners = find_corners(classical_mag, side, config.tau);
    const bool equal = quantum_corners == classical_corners;

    const double peak = *std::max_element(quantum_mag.begin(), quantum_mag.end());
    io::PgmImage magnitude_image;
    magnitude_image.width = side;
    magnitude_image.height = side;
    magnitude_image.pixels.resize(side * side);
    for (std::size_t i = 0; i < quantum_mag.size(); ++i) {
        magnitude_image.pixels[i] = static_cast<std::uint8_t>(std::lround(255.0 * quantum_mag[i] / peak));
    }
    CsvBuilder csv({"row", "col", "magnitude"});
    for (auto p : quantum_corners) {
        csv.row(p / side, p % side, quantum_mag[p]);
    }
    const std::size_t clusters = count_clusters(quantum_corners, side);
    report.details = {{"side", side},
                      {"tau", config.tau},
                      {"corner_pixels", quantum_corners.size()},
                      {"classical_corner_pixels", classical_corners.size()},
                      {"corner_clusters", clusters},
                      {"sets_equal", equal}};
    report.checks.push_back({"quantum_corners_equal_classical", equal});
    const auto mag_path = artifact_path(config, "corners_magnitude.pgm");
    io::write_file_atomic(mag_path, io::encode_pgm(magnitude_image));
    report.artifacts["magnitude_pgm"] = mag_path;
    const auto csv_path = artifact_path(config, "corners.csv");
    io::write_file_atomic(csv_path, csv.text());
    report.artifacts["corners_csv"] = csv_path;
    std::ostringstream text;
    text << "corners: side=" << side << " corner_pixels=" << quantum_corners.size() << " clusters=" << clusters
         << " sets_equal=" << (equal ? "yes" : "no") << "\n";
    report.text = text.str();
    return report;
}

RunReport cmd_resources(const RunConfig &config) {
    prepare_out_dir(config);
    RunReport report;
    report.command = "resources";
    report.input_source = "none";
    report.mode = config.mode;
    report.seed = config.seed;
    const std::size_t n_lo = config.n.value_or(config.n_min);
    const std::size_t n_hi = config.n.value_or(config.n_max);
    const std::size_t d_lo = config.d.value_or(config.d_min);
    const std::size_t d_hi = config.d.value_or(config.d_max);
    if (n_lo == 0 || d_lo == 0 || n_lo > n_hi || d_lo > d_hi) {
        throw QhtError(ErrorCode::ShapeMismatch, "empty or invalid n/d range");
    }
    report.n = n_hi;
    report.d = d_hi;

    json rows = json::array();
    std::ostringstream text;
    text << std::setw(3) << "d" << std::setw(4) << "n" << std::setw(8) << "qubits" << std::setw(10) << "1q"
         << std::setw(10) << "2q" << std::setw(10) << "total" << std::setw(10) << "depth" << std::setw(14) << "fft_ops"
         << "\n";
    std::map<std::size_t, std::vector<ResourceReport>> by_d;
    for (std::size_t d = d_lo; d <= d_hi; ++d) {
        for (std::size_t n = n_lo; n <= n_hi; ++n) {
            const auto row = compare_classical(n, d, config.components, config.mode);
            by_d[d].push_back(row.quantum);
            json j = resource_to_json(row.quantum);
            j["side"] = row.side;
            j["components"] = row.components;
            j["fft_ops"] = row.fft_ops;
            j["direct_ops"] = row.direct_ops;
            j["classical_best"] = row.classical_best;
            rows.push_back(j);
            text << std::setw(3) << d << std::setw(4) << n << std::setw(8) << row.quantum.qubits_used << std::setw(10)
                 << row.quantum.count_1q << std::setw(10) << row.quantum.count_2q << std::setw(10) << row.quantum.total
                 << std::setw(10) << row.quantum.depth << std::setw(14) << std::setprecision(6) << row.fft_ops << "\n";
        }
    }
    json fits = json::array();
    for (const auto &[d, list] : by_d) {
        if (list.size() < 3) {
            continue;
        }
        std::vector<std::vector<double>> design;
        std::vector<double> totals;
        std::vector<double> depths;
        for (const auto &r : list) {
            design.push_back(fit_row(static_cast<double>(r.n)));
            totals.push_back(static_cast<double>(r.total));
            depths.push_back(static_cast<double>(r.depth));
        }
        const auto total_fit = fit_least_squares(design, totals);
        const auto depth_fit = fit_least_squares(design, depths);
        fits.push_back({{"d", d},
                        {"model", "a*n^2 + b*n + c"},
                        {"total_coefficients", total_fit.coefficients},
                        {"total_r_squared", total_fit.r_squared},
                        {"depth_coefficients", depth_fit.coefficients},
                        {"depth_r_squared", depth_fit.r_squared}});
        text << "fit d=" << d << ": total R^2=" << std::setprecision(8) << total_fit.r_squared
             << " depth R^2=" << depth_fit.r_squared << "\n";
    }
    report.details = {{"rows", rows}, {"fits", fits}, {"fft_op_constant", kFftOpConstant}};
    report.text = text.str();
    return report;
}

RunReport cmd_transform(const RunConfig &config) {
    if (config.input.empty()) {
        throw QhtError(ErrorCode::Io, "transform needs an input file");
    }
    require_input(config);
    prepare_out_dir(config);
    RunReport report;
    report.command = "transform";
    const auto bytes = io::read_bytes(config.input);
    report.input_source = config.input.generic_string();
    report.input_sha256 = io::sha256_hex(bytes);
    const bool is_pgm = bytes.size() >= 2 && bytes[0] == 'P' && (bytes[1] == '2' || bytes[1] == '5');

    SignalTensor tensor;
    if (is_pgm) {
        tensor = image_tensor(io::parse_pgm(bytes));
    } else {
        auto signal = io::parse_csv_signal(std::string_view(reinterpret_cast<const char *>(bytes.data()), bytes.size()));
        const std::size_t n = resize_signal(signal.values, config, report);
        tensor = SignalTensor::from_real(1, n, signal.values);
    }
    const auto out = run_both(tensor, config, report);

    std::string csv_text;
    if (tensor.dims() == 1) {
        CsvBuilder csv({"index", "quantum_re", "quantum_im", "classical_re", "classical_im"});
        for (std::size_t k = 0; k < tensor.size(); ++k) {
            csv.row(k, out.quantum[k].real(), out.quantum[k].imag(), out.classical[k].real(), out.classical[k].imag());
        }
        csv_text = csv.text();
    } else {
        CsvBuilder csv({"row", "col", "quantum_re", "quantum_im", "classical_re", "classical_im"});
        const std::size_t side = tensor.side();
        for (std::size_t k = 0; k < tensor.size(); ++k) {
            csv.row(k / side, k % side, out.quantum[k].real(), out.quantum[k].imag(), out.classical[k].real(),
                    out.classical[k].imag());
        }
        csv_text = csv.text();
    }
    report.details = {{"format", is_pgm ? "pgm" : "csv"},
                      {"scaling", "output = unit-norm state * input_norm * sqrt(success_probability)"}};
    const auto path = artifact_path(config, "transform.csv");
    io::write_file_atomic(path, csv_text);
    report.artifacts["csv"] = path;
    std::ostringstream text;
    text << std::setprecision(17) << "transform: d=" << tensor.dims() << " n=" << tensor.bits()
         << " fidelity=" << *report.fidelity << " max_abs_error=" << *report.max_abs_error << "\n";
    report.text = text.str();
    return report;
}

RunReport run_command(const RunConfig &config) {
    const auto start = std::chrono::steady_clock::now();
    RunReport report;
    if (config.command == "analytic") {
        report = cmd_analytic(config);
    } else if (config.command == "envelope") {
        report = cmd_envelope(config);
    } else if (config.command == "corners") {
        report = cmd_corners(config);
    } else if (config.command == "resources") {
        report = cmd_resources(config);
    } else if (config.command == "transform") {
        report = cmd_transform(config);
    } else {
        throw std::invalid_argument("unknown command " + config.command);
    }
    if (config.timing) {
        report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    const auto path = artifact_path(config, config.command + ".json");
    report.artifacts["report"] = path;
    io::write_file_atomic(path, report.to_json().dump(2) + "\n");
    return report;
}

}  // namespace qht::pipeline
