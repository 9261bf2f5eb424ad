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

#include "qht/resources.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

#include "qht/error.h"
#include "qht/qht.h"

namespace qht {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

BasisOp one_qubit(std::string name, std::size_t target, const Matrix2 &m) {
    return BasisOp{BasisKind::OneQubit, std::move(name), target, 0, m};
}

BasisOp hadamard(std::size_t q) {
    const double s = 1.0 / std::numbers::sqrt2;
    return one_qubit("h", q, {s, s, s, -s});
}
BasisOp pauli_x(std::size_t q) {
    return one_qubit("x", q, {0.0, 1.0, 1.0, 0.0});
}
BasisOp pauli_z(std::size_t q) {
    return one_qubit("z", q, {1.0, 0.0, 0.0, -1.0});
}
BasisOp phase(std::size_t q, double angle, std::string name = "p") {
    return one_qubit(std::move(name), q, {1.0, 0.0, 0.0, std::polar(1.0, angle)});
}
BasisOp t_gate(std::size_t q) {
    return phase(q, std::numbers::pi / 4, "t");
}
BasisOp tdg_gate(std::size_t q) {
    return phase(q, -std::numbers::pi / 4, "tdg");
}
BasisOp cnot(std::size_t control, std::size_t target) {
    return BasisOp{BasisKind::Cnot, "cx", target, control, {}};
}

using Ops = std::vector<BasisOp>;

void append_toffoli(Ops &ops, std::size_t a, std::size_t b, std::size_t c) {
    ops.push_back(hadamard(c));
    ops.push_back(cnot(b, c));
    ops.push_back(tdg_gate(c));
    ops.push_back(cnot(a, c));
    ops.push_back(t_gate(c));
    ops.push_back(cnot(b, c));
    ops.push_back(tdg_gate(c));
    ops.push_back(cnot(a, c));
    ops.push_back(t_gate(b));
    ops.push_back(t_gate(c));
    ops.push_back(hadamard(c));
    ops.push_back(cnot(a, b));
    ops.push_back(t_gate(a));
    ops.push_back(tdg_gate(b));
    ops.push_back(cnot(a, b));
}

// C^m X with m >= 3 using m - 2 borrowed qubits in any state: 4(m - 2)
// Toffolis. The second half of the sequence undoes the changes to the
// borrowed qubits.
void append_vchain(Ops &ops, std::span<const std::size_t> c, std::span<const std::size_t> a, std::size_t target) {
    const std::size_t m = c.size();
    auto descend = [&] {
        for (std::size_t i = m - 3; i-- > 0;) {
            append_toffoli(ops, c[i + 2], a[i], a[i + 1]);
        }
    };
    auto ascend = [&] {
        for (std::size_t i = 0; i + 3 < m; ++i) {
            append_toffoli(ops, c[i + 2], a[i], a[i + 1]);
        }
    };
    append_toffoli(ops, c[m - 1], a[m - 3], target);
    descend();
    append_toffoli(ops, c[0], c[1], a[0]);
    ascend();
    append_toffoli(ops, c[m - 1], a[m - 3], target);
    descend();
    append_toffoli(ops, c[0], c[1], a[0]);
    ascend();
}

void append_mcx(Ops &ops, std::span<const std::size_t> controls, std::size_t target,
                std::span<const std::size_t> borrowable) {
    const std::size_t m = controls.size();
    if (m == 0) {
        ops.push_back(pauli_x(target));
        return;
    }
    if (m == 1) {
        ops.push_back(cnot(controls[0], target));
        return;
    }
    if (m == 2) {
        append_toffoli(ops, controls[0], controls[1], target);
        return;
    }
    if (borrowable.size() >= m - 2) {
        append_vchain(ops, controls, borrowable.first(m - 2), target);
        return;
    }
    if (borrowable.empty()) {
        throw QhtError(ErrorCode::UnsupportedGate,
                       "MCX with " + std::to_string(m) + " controls needs a scratch qubit");
    }
    const std::size_t scratch = borrowable[0];
    const auto rest = borrowable.subspan(1);
    const std::size_t first = (m + 1) / 2;
    const auto group_a = controls.first(first);
    const auto group_b = controls.subspan(first);

    std::vector<std::size_t> lower_pool(group_b.begin(), group_b.end());
    lower_pool.push_back(target);
    lower_pool.insert(lower_pool.end(), rest.begin(), rest.end());

    std::vector<std::size_t> upper_controls(group_b.begin(), group_b.end());
    upper_controls.push_back(scratch);
    std::vector<std::size_t> upper_pool(group_a.begin(), group_a.end());
    upper_pool.insert(upper_pool.end(), rest.begin(), rest.end());

    for (int repeat = 0; repeat < 2; ++repeat) {
        append_mcx(ops, group_a, scratch, lower_pool);
        append_mcx(ops, upper_controls, target, upper_pool);
    }
}

}  // namespace

std::vector<BasisOp> decompose(const GateOp &op, std::optional<std::size_t> scratch_qubit) {
    Ops ops;
    std::visit(Overloaded{
                   [&](const gate::H &g) { ops.push_back(hadamard(g.target)); },
                   [&](const gate::X &g) { ops.push_back(pauli_x(g.target)); },
                   [&](const gate::Z &g) { ops.push_back(pauli_z(g.target)); },
                   [&](const gate::CPhase &g) {
                       ops.push_back(phase(g.control, g.angle / 2));
                       ops.push_back(cnot(g.control, g.target));
                       ops.push_back(phase(g.target, -g.angle / 2));
                       ops.push_back(cnot(g.control, g.target));
                       ops.push_back(phase(g.target, g.angle / 2));
                   },
                   [&](const gate::Swap &g) {
                       ops.push_back(cnot(g.a, g.b));
                       ops.push_back(cnot(g.b, g.a));
                       ops.push_back(cnot(g.a, g.b));
                   },
                   [&](const gate::Mcx &g) {
                       std::vector<std::size_t> controls;
                       for (const auto &c : g.controls) {
                           controls.push_back(c.qubit);
                           if (c.polarity == Polarity::Negative) {
                               ops.push_back(pauli_x(c.qubit));
                           }
                       }
                       std::vector<std::size_t> pool;
                       if (scratch_qubit) {
                           if (*scratch_qubit == g.target ||
                               std::find(controls.begin(), controls.end(), *scratch_qubit) != controls.end()) {
                               throw QhtError(ErrorCode::DuplicateQubit, "scratch qubit is used by the MCX");
                           }
                           pool.push_back(*scratch_qubit);
                       }
                       append_mcx(ops, controls, g.target, pool);
                       for (const auto &c : g.controls) {
                           if (c.polarity == Polarity::Negative) {
                               ops.push_back(pauli_x(c.qubit));
                           }
                       }
                   },
                   [&](const gate::MeasureReset &) {},
               },
               op);
    return ops;
}

DecomposedCircuit decompose_circuit(const Circuit &circuit) {
    DecomposedCircuit out;
    out.num_qubits = circuit.num_qubits;
    for (const auto &op : circuit.ops) {
        if (const auto *mcx = std::get_if<gate::Mcx>(&op); mcx && mcx->controls.size() >= 3) {
            out.scratch_qubit = circuit.num_qubits;
            out.num_qubits = circuit.num_qubits + 1;
            break;
        }
    }
    for (const auto &op : circuit.ops) {
        if (const auto *m = std::get_if<gate::MeasureReset>(&op)) {
            out.steps.emplace_back(*m);
            continue;
        }
        for (auto &b : decompose(op, out.scratch_qubit)) {
            out.steps.emplace_back(std::move(b));
        }
    }
    return out;
}

std::vector<MeasurementRecord> run_decomposed(const DecomposedCircuit &circuit, Statevector &state) {
    if (state.num_qubits() != circuit.num_qubits) {
        throw QhtError(ErrorCode::LayoutMismatch, "state width differs from decomposed circuit");
    }
    std::vector<MeasurementRecord> records;
    for (const auto &step : circuit.steps) {
        if (const auto *b = std::get_if<BasisOp>(&step)) {
            if (b->kind == BasisKind::Cnot) {
                state.apply_cx(b->control, b->target);
            } else {
                state.apply_matrix(b->matrix, b->target);
            }
        } else {
            auto recs = state.apply(std::get<gate::MeasureReset>(step));
            records.insert(records.end(), recs.begin(), recs.end());
        }
    }
    return records;
}

std::size_t schedule_depth(const DecomposedCircuit &circuit) {
    std::vector<std::size_t> busy(circuit.num_qubits, 0);
    std::size_t depth = 0;
    for (const auto &step : circuit.steps) {
        const auto *b = std::get_if<BasisOp>(&step);
        if (b == nullptr) {
            continue;
        }
        std::size_t start = busy[b->target];
        if (b->kind == BasisKind::Cnot) {
            start = std::max(start, busy[b->control]);
            busy[b->control] = start + 1;
        }
        busy[b->target] = start + 1;
        depth = std::max(depth, start + 1);
    }
    return depth;
}

ResourceReport estimate(std::size_t n, std::size_t d, QhtMode mode) {
    const Circuit circuit = assemble_qht_circuit(n, d, mode);
    const DecomposedCircuit lowered = decompose_circuit(circuit);
    ResourceReport report;
    report.n = n;
    report.d = d;
    report.mode = mode;
    for (const auto &step : lowered.steps) {
        if (const auto *b = std::get_if<BasisOp>(&step)) {
            if (b->kind == BasisKind::Cnot) {
                ++report.count_2q;
            } else {
                ++report.count_1q;
            }
        } else {
            ++report.measurements;
        }
    }
    report.total = report.count_1q + report.count_2q;
    report.depth = schedule_depth(lowered);
    report.qubits_used = circuit.layout.total_qubits();
    report.scratch_qubits = lowered.scratch_qubit ? 1 : 0;
    return report;
}

ClassicalComparison compare_classical(std::size_t n, std::size_t d, std::size_t components, QhtMode mode) {
    ClassicalComparison row;
    row.n = n;
    row.d = d;
    row.side = std::ldexp(1.0, static_cast<int>(n));
    row.components = components;
    const double elements = std::ldexp(1.0, static_cast<int>(n * d));
    const double log_elements = static_cast<double>(n * d);
    row.fft_ops = 2.0 * kFftOpConstant * elements * log_elements;
    row.direct_ops = static_cast<double>(components) * elements;
    row.classical_best = components == 0 ? row.fft_ops : std::min(row.fft_ops, row.direct_ops);
    row.quantum = estimate(n, d, mode);
    return row;
}

LinearFit fit_least_squares(const std::vector<std::vector<double>> &rows, std::span<const double> y) {
    if (rows.empty() || rows.size() != y.size()) {
        throw QhtError(ErrorCode::ShapeMismatch, "fit needs one design row per observation");
    }
    const auto cols = static_cast<Eigen::Index>(rows.front().size());
    Eigen::MatrixXd design(static_cast<Eigen::Index>(rows.size()), cols);
    Eigen::VectorXd target(static_cast<Eigen::Index>(y.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<Eigen::Index>(rows[i].size()) != cols) {
            throw QhtError(ErrorCode::ShapeMismatch, "ragged design matrix");
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            design(static_cast<Eigen::Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
        }
        target(static_cast<Eigen::Index>(i)) = y[i];
    }
    const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(target);
    const Eigen::VectorXd residual = target - design * coef;
    const double mean = target.mean();
    const double ss_tot = (target.array() - mean).square().sum();
    const double ss_res = residual.squaredNorm();
    LinearFit fit;
    fit.coefficients.assign(coef.data(), coef.data() + coef.size());
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

}  // namespace qht
