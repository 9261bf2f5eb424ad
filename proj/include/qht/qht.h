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

#ifndef QHT_QHT_H
#define QHT_QHT_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qht/circuit.h"
#include "qht/signal_tensor.h"
#include "qht/statevector.h"

namespace qht {

/// QFT with kernel |k> -> N^{-1/2} sum_j e^{+2 pi i jk/N} |j> on `qubits`
/// (least significant first), including the final swap network.
std::vector<GateOp> build_qft(std::span<const std::size_t> qubits);
/// Adjoint of build_qft: reversed order, negated angles.
std::vector<GateOp> build_iqft(std::span<const std::size_t> qubits);

/// One open-controlled MCX per register onto its ancilla, each followed by a
/// measure-and-reset of that ancilla.
std::vector<GateOp> build_dc_removal(const RegisterLayout &layout, QhtMode mode, bool sampled = false);

/// Parallel QFTs, DC removal, Z on every register MSB, parallel inverse QFTs.
/// `sampled` emits MeasureReset in sample mode instead of postselecting 0.
/// Throws QubitCountOutOfRange when the layout exceeds max_qubits().
Circuit build_qht_circuit(std::size_t n, std::size_t d, QhtMode mode, bool sampled = false);
/// Same circuit without the simulation qubit guard, for static analysis.
Circuit assemble_qht_circuit(std::size_t n, std::size_t d, QhtMode mode, bool sampled = false);

/// Frobenius-normalizes f into the data registers; ancillas start in |0>.
Statevector encode_tensor(const SignalTensor &f, const RegisterLayout &layout);

struct QhtResult {
    /// Unit-norm transformed tensor with the (-i)^d global phase divided out.
    /// scale() holds ||f||_F * sqrt(success_probability), which restores the
    /// unnormalized transform when multiplied in.
    SignalTensor output;
    double success_probability = 0;
    std::vector<MeasurementRecord> measurements;
    Statevector state;
    bool global_phase_applied = true;

    /// output * scale(): the de-normalized transform of the input.
    SignalTensor denormalized() const;
};

/// Runs the postselected QHT circuit on f. Throws PostselectionImpossible when
/// all spectral energy sits in DC bins.
QhtResult run_qht(const SignalTensor &f, QhtMode mode = QhtMode::Dynamic);

struct SampledRun {
    QhtResult result;
    std::size_t trials = 0;
};

/// Repeat-until-success with sampled mid-circuit measurements. Gives up with
/// PostselectionImpossible after max_trials failures.
SampledRun run_qht_sampled(const SignalTensor &f, QhtMode mode, std::uint64_t seed, std::size_t max_trials = 10000);

/// Fraction of spectral energy on bins with some w_m == 0.
double dc_fraction(const SignalTensor &f);

}  // namespace qht

#endif
