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

#include "qht/circuit.h"

#include <algorithm>

#include "qht/error.h"

namespace qht {

const char *mode_name(QhtMode mode) {
    return mode == QhtMode::Dynamic ? "dynamic" : "static";
}

RegisterLayout RegisterLayout::make(std::size_t n, std::size_t d, QhtMode mode) {
    if (n == 0) {
        throw QhtError(ErrorCode::EmptyRegister, "register size n must be >= 1");
    }
    if (d == 0) {
        throw QhtError(ErrorCode::LayoutMismatch, "dimension count d must be >= 1");
    }
    RegisterLayout layout;
    layout.d = d;
    layout.n = n;
    layout.register_qubits.resize(d);
    for (std::size_t r = 0; r < d; ++r) {
        const std::size_t base = (d - 1 - r) * n;
        for (std::size_t b = 0; b < n; ++b) {
            layout.register_qubits[r].push_back(base + b);
        }
    }
    const std::size_t ancillas = mode == QhtMode::Dynamic ? 1 : d;
    for (std::size_t a = 0; a < ancillas; ++a) {
        layout.ancilla_qubits.push_back(d * n + a);
    }
    return layout;
}

std::size_t RegisterLayout::ancilla_for(std::size_t r) const {
    if (ancilla_qubits.size() == 1) {
        return ancilla_qubits.front();
    }
    if (ancilla_qubits.size() != d || r >= d) {
        throw QhtError(ErrorCode::LayoutMismatch, "no ancilla assigned to register " + std::to_string(r));
    }
    return ancilla_qubits[r];
}

void RegisterLayout::validate() const {
    if (register_qubits.size() != d) {
        throw QhtError(ErrorCode::LayoutMismatch, "register count differs from d");
    }
    if (ancilla_qubits.size() != 1 && ancilla_qubits.size() != d) {
        throw QhtError(ErrorCode::LayoutMismatch, "ancilla count must be 1 or d");
    }
    std::vector<bool> used(total_qubits(), false);
    auto claim = [&](std::size_t q) {
        if (q >= used.size() || used[q]) {
            throw QhtError(ErrorCode::LayoutMismatch, "qubit " + std::to_string(q) + " reused or out of range");
        }
        used[q] = true;
    };
    for (const auto &reg : register_qubits) {
        if (reg.size() != n) {
            throw QhtError(ErrorCode::LayoutMismatch, "register width differs from n");
        }
        std::for_each(reg.begin(), reg.end(), claim);
    }
    std::for_each(ancilla_qubits.begin(), ancilla_qubits.end(), claim);
}

void Circuit::validate() const {
    for (const auto &op : ops) {
        qht::validate(op, num_qubits);
    }
}

std::vector<MeasurementRecord> run_circuit(const Circuit &circuit, Statevector &state, Rng *rng) {
    if (state.num_qubits() != circuit.num_qubits) {
        throw QhtError(ErrorCode::LayoutMismatch, "state has " + std::to_string(state.num_qubits()) +
                                                      " qubits, circuit expects " +
                                                      std::to_string(circuit.num_qubits));
    }
    std::vector<MeasurementRecord> records;
    for (const auto &op : circuit.ops) {
        auto recs = state.apply(op, rng);
        records.insert(records.end(), recs.begin(), recs.end());
    }
    return records;
}

}  // namespace qht
