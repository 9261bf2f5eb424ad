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

#include "qht/qht.h"

#include <cmath>
#include <numbers>
#include <string>

#include "qht/classical.h"
#include "qht/error.h"

namespace qht {

std::vector<GateOp> build_qft(std::span<const std::size_t> qubits) {
    const std::size_t n = qubits.size();
    if (n == 0) {
        throw QhtError(ErrorCode::EmptyRegister, "QFT on an empty register");
    }
    std::vector<GateOp> ops;
    for (std::size_t t = n; t-- > 0;) {
        ops.emplace_back(gate::H{qubits[t]});
        for (std::size_t c = t; c-- > 0;) {
            const double angle = std::numbers::pi / static_cast<double>(std::size_t{1} << (t - c));
            ops.emplace_back(gate::CPhase{qubits[c], qubits[t], angle});
        }
    }
    for (std::size_t i = 0; i < n / 2; ++i) {
        ops.emplace_back(gate::Swap{qubits[i], qubits[n - 1 - i]});
    }
    return ops;
}

std::vector<GateOp> build_iqft(std::span<const std::size_t> qubits) {
    auto forward = build_qft(qubits);
    std::vector<GateOp> ops;
    ops.reserve(forward.size());
    for (auto it = forward.rbegin(); it != forward.rend(); ++it) {
        if (auto *cp = std::get_if<gate::CPhase>(&*it)) {
            ops.emplace_back(gate::CPhase{cp->control, cp->target, -cp->angle});
        } else {
            ops.push_back(*it);
        }
    }
    return ops;
}

std::vector<GateOp> build_dc_removal(const RegisterLayout &layout, QhtMode mode, bool sampled) {
    layout.validate();
    const std::size_t expected = mode == QhtMode::Dynamic ? 1 : layout.d;
    if (layout.ancilla_qubits.size() != expected) {
        throw QhtError(ErrorCode::LayoutMismatch, std::string(mode_name(mode)) + " mode needs " +
                                                      std::to_string(expected) + " ancilla(s), layout has " +
                                                      std::to_string(layout.ancilla_qubits.size()));
    }
    std::vector<GateOp> ops;
    for (std::size_t r = 0; r < layout.d; ++r) {
        gate::Mcx mcx;
        for (std::size_t q : layout.register_qubits[r]) {
            mcx.controls.push_back({q, Polarity::Negative});
        }
        mcx.target = layout.ancilla_for(r);
        ops.emplace_back(std::move(mcx));
        gate::MeasureReset measure{layout.ancilla_for(r), gate::Postselect{0}};
        if (sampled) {
            measure.mode = gate::Sample{};
        }
        ops.emplace_back(measure);
    }
    return ops;
}

Circuit build_qht_circuit(std::size_t n, std::size_t d, QhtMode mode, bool sampled) {
    check_qubit_count(RegisterLayout::make(n, d, mode).total_qubits());
    return assemble_qht_circuit(n, d, mode, sampled);
}

Circuit assemble_qht_circuit(std::size_t n, std::size_t d, QhtMode mode, bool sampled) {
    auto layout = RegisterLayout::make(n, d, mode);
    Circuit circuit;
    circuit.num_qubits = layout.total_qubits();
    for (const auto &reg : layout.register_qubits) {
        auto qft = build_qft(reg);
        circuit.ops.insert(circuit.ops.end(), qft.begin(), qft.end());
    }
    auto dc = build_dc_removal(layout, mode, sampled);
    circuit.ops.insert(circuit.ops.end(), dc.begin(), dc.end());
    for (std::size_t r = 0; r < d; ++r) {
        circuit.ops.emplace_back(gate::Z{layout.msb(r)});
    }
    for (const auto &reg : layout.register_qubits) {
        auto iqft = build_iqft(reg);
        circuit.ops.insert(circuit.ops.end(), iqft.begin(), iqft.end());
    }
    circuit.layout = std::move(layout);
    circuit.validate();
    return circuit;
}

Statevector encode_tensor(const SignalTensor &f, const RegisterLayout &layout) {
    if (f.dims() != layout.d || f.bits() != layout.n) {
        throw QhtError(ErrorCode::ShapeMismatch, "tensor shape does not match register layout");
    }
    check_qubit_count(layout.total_qubits());
    std::vector<Complex> raw(std::size_t{1} << layout.total_qubits());
    const auto data = f.data();
    std::copy(data.begin(), data.end(), raw.begin());
    return Statevector::from_amplitudes(raw);
}

namespace {

QhtResult decode(const SignalTensor &f, Statevector state, std::vector<MeasurementRecord> records) {
    double success = 1.0;
    for (const auto &rec : records) {
        success *= rec.probability;
    }
    // The circuit leaves (-i)^d times the transform; dividing by (-i) is
    // multiplying by i.
    Complex phase = 1.0;
    for (std::size_t m = 0; m < f.dims(); ++m) {
        phase *= Complex(0.0, 1.0);
    }
    const auto amps = state.amplitudes();
    std::vector<Complex> out(f.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = amps[i] * phase;
    }
    SignalTensor output(f.dims(), f.bits(), std::move(out), f.frobenius_norm() * std::sqrt(success));
    return QhtResult{std::move(output), success, std::move(records), std::move(state), true};
}

}  // namespace

SignalTensor QhtResult::denormalized() const {
    SignalTensor out = output;
    for (auto &v : out.data()) {
        v *= output.scale();
    }
    out.set_scale(1.0);
    return out;
}

QhtResult run_qht(const SignalTensor &f, QhtMode mode) {
    const Circuit circuit = build_qht_circuit(f.bits(), f.dims(), mode);
    Statevector state = encode_tensor(f, circuit.layout);
    auto records = run_circuit(circuit, state);
    return decode(f, std::move(state), std::move(records));
}

SampledRun run_qht_sampled(const SignalTensor &f, QhtMode mode, std::uint64_t seed, std::size_t max_trials) {
    const Circuit circuit = build_qht_circuit(f.bits(), f.dims(), mode, true);
    const Statevector initial = encode_tensor(f, circuit.layout);
    Rng rng(seed);
    for (std::size_t trial = 1; trial <= max_trials; ++trial) {
        Statevector state = initial;
        std::vector<MeasurementRecord> records;
        bool failed = false;
        for (const auto &op : circuit.ops) {
            auto recs = state.apply(op, &rng);
            if (!recs.empty() && recs.front().outcome != 0) {
                failed = true;
                break;
            }
            records.insert(records.end(), recs.begin(), recs.end());
        }
        if (!failed) {
            return SampledRun{decode(f, std::move(state), std::move(records)), trial};
        }
    }
    throw QhtError(ErrorCode::PostselectionImpossible,
                   "no successful trial in " + std::to_string(max_trials) + " attempts");
}

double dc_fraction(const SignalTensor &f) {
    const SignalTensor spectrum = fft_nd(f, false);
    double total = 0;
    double dc = 0;
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        const double s = std::norm(spectrum[i]);
        total += s;
        if (is_dc_bin(i, f.dims(), f.bits())) {
            dc += s;
        }
    }
    if (!(total > 0)) {
        throw QhtError(ErrorCode::ZeroNorm, "dc_fraction of a zero tensor");
    }
    return dc / total;
}

}  // namespace qht
