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

#ifndef QHT_CIRCUIT_H
#define QHT_CIRCUIT_H

#include <cstddef>
#include <vector>

#include "qht/statevector.h"

namespace qht {

enum class QhtMode { Dynamic, Static };

const char *mode_name(QhtMode mode);

/// Placement of d registers of n qubits plus the ancilla(s).
///
/// Register r (0-based here, r = 0 holds k_1) occupies qubits
/// (d - 1 - r) * n ... (d - 1 - r) * n + n - 1, least significant first, so the
/// data amplitudes sit at the row-major index of (k_1, ..., k_d). Ancillas
/// follow at d * n and up.
struct RegisterLayout {
    std::size_t d = 0;
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> register_qubits;
    std::vector<std::size_t> ancilla_qubits;

    static RegisterLayout make(std::size_t n, std::size_t d, QhtMode mode);

    std::size_t total_qubits() const {
        return d * n + ancilla_qubits.size();
    }
    std::size_t data_qubits() const {
        return d * n;
    }
    std::size_t msb(std::size_t r) const {
        return register_qubits.at(r).back();
    }
    /// Ancilla used by register r's DC check.
    std::size_t ancilla_for(std::size_t r) const;

    /// Throws LayoutMismatch if registers/ancillas are not a disjoint cover.
    void validate() const;
};

struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<GateOp> ops;
    RegisterLayout layout;

    void validate() const;
};

/// Runs every op in order. Measurement records are returned in op order.
std::vector<MeasurementRecord> run_circuit(const Circuit &circuit, Statevector &state, Rng *rng = nullptr);

}  // namespace qht

#endif
