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

#ifndef QHT_RESOURCES_H
#define QHT_RESOURCES_H

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qht/circuit.h"
#include "qht/statevector.h"

namespace qht {

enum class BasisKind { OneQubit, Cnot };

/// Element of the {one-qubit gate, CNOT} basis used for counting.
struct BasisOp {
    BasisKind kind;
    std::string name;
    std::size_t target;
    std::size_t control = 0;
    Matrix2 matrix{};
};

using DecomposedStep = std::variant<BasisOp, gate::MeasureReset>;

/// Lowers one QHT gate to the basis:
///   H, X, Z -> 1 one-qubit gate
///   CPhase  -> 3 phase gates + 2 CNOT
///   Swap    -> 3 CNOT
///   MCX     -> 2 X per negative control around the positive-control form;
///              1 control = CNOT, 2 = Toffoli (6 CNOT + 9 one-qubit),
///              m >= 3 = split over one borrowed scratch qubit into two pairs
///              of smaller MCXs, each realised as a Toffoli V-chain that
///              borrows the other half's qubits.
///   MeasureReset -> nothing
/// MCX with three or more controls needs scratch_qubit; without it the gate
/// is UnsupportedGate. The scratch qubit may hold any state (it is restored).
std::vector<BasisOp> decompose(const GateOp &op, std::optional<std::size_t> scratch_qubit);

struct DecomposedCircuit {
    std::size_t num_qubits = 0;  // including scratch
    std::optional<std::size_t> scratch_qubit;
    std::vector<DecomposedStep> steps;
};

/// Lowers every op; adds one scratch qubit iff some MCX has >= 3 controls.
DecomposedCircuit decompose_circuit(const Circuit &circuit);

/// Simulates a decomposed circuit (postselecting like the original).
std::vector<MeasurementRecord> run_decomposed(const DecomposedCircuit &circuit, Statevector &state);

struct ResourceReport {
    std::size_t n = 0;
    std::size_t d = 0;
    QhtMode mode = QhtMode::Dynamic;
    std::size_t count_1q = 0;
    std::size_t count_2q = 0;
    std::size_t total = 0;
    std::size_t depth = 0;
    /// Logical qubits of the QHT circuit: dn+1 (dynamic) or dn+d (static).
    std::size_t qubits_used = 0;
    /// Extra qubit borrowed by the MCX decomposition (0 or 1).
    std::size_t scratch_qubits = 0;
    std::size_t measurements = 0;
};

/// Greedy schedule: each basis op starts one step after the latest op on any
/// of its qubits. Measurements take no time.
std::size_t schedule_depth(const DecomposedCircuit &circuit);

ResourceReport estimate(std::size_t n, std::size_t d, QhtMode mode = QhtMode::Dynamic);

/// Real-operation constant per butterfly-level element of a radix-2 FFT.
inline constexpr double kFftOpConstant = 5.0;

struct ClassicalComparison {
    std::size_t n = 0;
    std::size_t d = 0;
    double side = 0;
    std::size_t components = 0;
    /// Forward + inverse FFT model: 2 * 5 * N^d * log2(N^d).
    double fft_ops = 0;
    /// Direct convolution sum for k components: k * N^d.
    double direct_ops = 0;
    double classical_best = 0;
    ResourceReport quantum;
};

ClassicalComparison compare_classical(std::size_t n, std::size_t d, std::size_t components,
                                      QhtMode mode = QhtMode::Dynamic);

struct LinearFit {
    std::vector<double> coefficients;
    double r_squared = 0;
};

/// Least squares y ~ sum_j coefficients[j] * rows[i][j].
LinearFit fit_least_squares(const std::vector<std::vector<double>> &rows, std::span<const double> y);

}  // namespace qht

#endif
