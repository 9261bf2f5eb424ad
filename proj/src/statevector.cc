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

#include "qht/statevector.h"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "qht/error.h"

namespace qht {

namespace {

inline std::size_t insert_zero_bit(std::size_t i, std::size_t bit) {
    const std::size_t low = i & ((std::size_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<std::size_t> qubits_of(const GateOp &op) {
    return std::visit(
        Overloaded{
            [](const gate::H &g) { return std::vector<std::size_t>{g.target}; },
            [](const gate::X &g) { return std::vector<std::size_t>{g.target}; },
            [](const gate::Z &g) { return std::vector<std::size_t>{g.target}; },
            [](const gate::CPhase &g) { return std::vector<std::size_t>{g.control, g.target}; },
            [](const gate::Swap &g) { return std::vector<std::size_t>{g.a, g.b}; },
            [](const gate::Mcx &g) {
                std::vector<std::size_t> qs;
                for (const auto &c : g.controls) {
                    qs.push_back(c.qubit);
                }
                qs.push_back(g.target);
                return qs;
            },
            [](const gate::MeasureReset &g) { return std::vector<std::size_t>{g.qubit}; },
        },
        op);
}

}  // namespace

std::size_t max_qubits() {
    const char *env = std::getenv("QHT_MAX_QUBITS");
    if (env != nullptr) {
        std::size_t value = 0;
        const char *end = env + std::strlen(env);
        auto [ptr, ec] = std::from_chars(env, end, value);
        if (ec == std::errc() && ptr == end && value > 0 && value < 8 * sizeof(std::size_t) - 4) {
            return value;
        }
    }
    return kDefaultMaxQubits;
}

void check_qubit_count(std::size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > max_qubits()) {
        throw QhtError(ErrorCode::QubitCountOutOfRange,
                       "requested " + std::to_string(num_qubits) + " qubits, allowed 1.." +
                           std::to_string(max_qubits()));
    }
}

std::string describe(const GateOp &op) {
    std::ostringstream out;
    std::visit(Overloaded{
                   [&](const gate::H &g) { out << "H(" << g.target << ")"; },
                   [&](const gate::X &g) { out << "X(" << g.target << ")"; },
                   [&](const gate::Z &g) { out << "Z(" << g.target << ")"; },
                   [&](const gate::CPhase &g) { out << "CPhase(" << g.control << "," << g.target << "," << g.angle << ")"; },
                   [&](const gate::Swap &g) { out << "Swap(" << g.a << "," << g.b << ")"; },
                   [&](const gate::Mcx &g) {
                       out << "MCX(";
                       for (const auto &c : g.controls) {
                           out << (c.polarity == Polarity::Negative ? "!" : "") << c.qubit << ",";
                       }
                       out << "->" << g.target << ")";
                   },
                   [&](const gate::MeasureReset &g) {
                       out << "MeasureReset(" << g.qubit << ",";
                       if (const auto *p = std::get_if<gate::Postselect>(&g.mode)) {
                           out << "postselect " << p->outcome;
                       } else {
                           out << "sample";
                       }
                       out << ")";
                   },
               },
               op);
    return out.str();
}

void validate(const GateOp &op, std::size_t num_qubits) {
    const auto qs = qubits_of(op);
    std::unordered_set<std::size_t> seen;
    for (std::size_t q : qs) {
        if (q >= num_qubits) {
            throw QhtError(ErrorCode::InvalidQubitIndex,
                           describe(op) + " touches qubit " + std::to_string(q) + " of " + std::to_string(num_qubits));
        }
        if (!seen.insert(q).second) {
            throw QhtError(ErrorCode::DuplicateQubit, describe(op) + " repeats qubit " + std::to_string(q));
        }
    }
    if (const auto *m = std::get_if<gate::MeasureReset>(&op)) {
        if (const auto *p = std::get_if<gate::Postselect>(&m->mode); p && p->outcome != 0 && p->outcome != 1) {
            throw std::invalid_argument("postselected outcome must be 0 or 1");
        }
    }
}

bool is_unitary(const GateOp &op) {
    return !std::holds_alternative<gate::MeasureReset>(op);
}

Statevector::Statevector(std::size_t num_qubits, std::vector<Complex> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
}

Statevector Statevector::zero(std::size_t num_qubits) {
    check_qubit_count(num_qubits);
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps[0] = 1.0;
    return Statevector(num_qubits, std::move(amps));
}

Statevector Statevector::from_amplitudes(std::span<const Complex> raw) {
    const std::size_t len = raw.size();
    if (len < 2 || (len & (len - 1)) != 0) {
        throw QhtError(ErrorCode::NonPowerOfTwoLength, "amplitude count " + std::to_string(len));
    }
    const auto num_qubits = static_cast<std::size_t>(std::countr_zero(len));
    check_qubit_count(num_qubits);
    double sum = 0;
    for (const auto &a : raw) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("non-finite amplitude");
        }
        sum += std::norm(a);
    }
    if (!(sum > 0)) {
        throw QhtError(ErrorCode::ZeroNorm, "amplitude vector has zero norm");
    }
    const double inv = 1.0 / std::sqrt(sum);
    std::vector<Complex> amps(raw.begin(), raw.end());
    for (auto &a : amps) {
        a *= inv;
    }
    return Statevector(num_qubits, std::move(amps));
}

double Statevector::norm() const {
    double sum = 0;
    for (const auto &a : amps_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

double Statevector::probability_of(std::size_t qubit, int outcome) const {
    check_qubit(qubit);
    const std::size_t mask = std::size_t{1} << qubit;
    const std::size_t want = outcome ? mask : 0;
    double p = 0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == want) {
            p += std::norm(amps_[i]);
        }
    }
    return p;
}

void Statevector::check_qubit(std::size_t q) const {
    if (q >= num_qubits_) {
        throw QhtError(ErrorCode::InvalidQubitIndex,
                       "qubit " + std::to_string(q) + " of " + std::to_string(num_qubits_));
    }
}

void Statevector::check_norm(const char *what) const {
    const double drift = std::abs(norm() - 1.0);
    if (drift > kNormTolerance) {
        throw std::logic_error(std::string("norm drift ") + std::to_string(drift) + " after " + what);
    }
}

void Statevector::apply_h(std::size_t target) {
    check_qubit(target);
    const std::size_t mask = std::size_t{1} << target;
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < amps_.size() / 2; ++i) {
        const std::size_t i0 = insert_zero_bit(i, target);
        const Complex a = amps_[i0];
        const Complex b = amps_[i0 | mask];
        amps_[i0] = (a + b) * s;
        amps_[i0 | mask] = (a - b) * s;
    }
}

void Statevector::apply_x(std::size_t target) {
    check_qubit(target);
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size() / 2; ++i) {
        const std::size_t i0 = insert_zero_bit(i, target);
        std::swap(amps_[i0], amps_[i0 | mask]);
    }
}

void Statevector::apply_z(std::size_t target) {
    check_qubit(target);
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size() / 2; ++i) {
        amps_[insert_zero_bit(i, target) | mask] *= -1.0;
    }
}

void Statevector::apply_cphase(std::size_t control, std::size_t target, double angle) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw QhtError(ErrorCode::DuplicateQubit, "CPhase control equals target");
    }
    const std::size_t both = (std::size_t{1} << control) | (std::size_t{1} << target);
    const Complex phase = std::polar(1.0, angle);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & both) == both) {
            amps_[i] *= phase;
        }
    }
}

void Statevector::apply_swap(std::size_t a, std::size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw QhtError(ErrorCode::DuplicateQubit, "Swap on a single qubit");
    }
    const std::size_t ma = std::size_t{1} << a;
    const std::size_t mb = std::size_t{1} << b;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & ma) != 0 && (i & mb) == 0) {
            std::swap(amps_[i], amps_[(i ^ ma) | mb]);
        }
    }
}

void Statevector::apply_cx(std::size_t control, std::size_t target) {
    const Control c{control, Polarity::Positive};
    apply_mcx(std::span<const Control>(&c, 1), target);
}

void Statevector::apply_matrix(const Matrix2 &m, std::size_t target) {
    check_qubit(target);
    const std::size_t mask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size() / 2; ++i) {
        const std::size_t i0 = insert_zero_bit(i, target);
        const Complex a = amps_[i0];
        const Complex b = amps_[i0 | mask];
        amps_[i0] = m[0] * a + m[1] * b;
        amps_[i0 | mask] = m[2] * a + m[3] * b;
    }
}

void Statevector::apply_mcx(std::span<const Control> controls, std::size_t target) {
    check_qubit(target);
    std::size_t control_mask = 0;
    std::size_t control_value = 0;
    for (const auto &c : controls) {
        check_qubit(c.qubit);
        const std::size_t bit = std::size_t{1} << c.qubit;
        if (c.qubit == target || (control_mask & bit) != 0) {
            throw QhtError(ErrorCode::DuplicateQubit, "MCX qubit " + std::to_string(c.qubit) + " repeated");
        }
        control_mask |= bit;
        if (c.polarity == Polarity::Positive) {
            control_value |= bit;
        }
    }
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size() / 2; ++i) {
        const std::size_t i0 = insert_zero_bit(i, target);
        if ((i0 & control_mask) == control_value) {
            std::swap(amps_[i0], amps_[i0 | tmask]);
        }
    }
}

double Statevector::measure_postselect(std::size_t qubit, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw std::invalid_argument("outcome must be 0 or 1");
    }
    const double p = probability_of(qubit, outcome);
    if (p < kPostselectionFloor) {
        std::ostringstream msg;
        msg << "outcome " << outcome << " on qubit " << qubit << " has probability " << p;
        throw QhtError(ErrorCode::PostselectionImpossible, msg.str());
    }
    const std::size_t mask = std::size_t{1} << qubit;
    const std::size_t want = outcome ? mask : 0;
    const double inv = 1.0 / std::sqrt(p);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & mask) == want) {
            amps_[i] *= inv;
        } else {
            amps_[i] = 0.0;
        }
    }
    return p;
}

int Statevector::measure_sample(std::size_t qubit, Rng &rng) {
    const double p1 = probability_of(qubit, 1);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    const int outcome = uniform(rng) < p1 ? 1 : 0;
    measure_postselect(qubit, outcome);
    return outcome;
}

std::vector<MeasurementRecord> Statevector::apply(const GateOp &op, Rng *rng) {
    validate(op, num_qubits_);
    std::vector<MeasurementRecord> records;
    std::visit(Overloaded{
                   [&](const gate::H &g) { apply_h(g.target); },
                   [&](const gate::X &g) { apply_x(g.target); },
                   [&](const gate::Z &g) { apply_z(g.target); },
                   [&](const gate::CPhase &g) { apply_cphase(g.control, g.target, g.angle); },
                   [&](const gate::Swap &g) { apply_swap(g.a, g.b); },
                   [&](const gate::Mcx &g) { apply_mcx(g.controls, g.target); },
                   [&](const gate::MeasureReset &g) {
                       MeasurementRecord rec{g.qubit, 0, 0.0};
                       if (const auto *p = std::get_if<gate::Postselect>(&g.mode)) {
                           rec.outcome = p->outcome;
                           rec.probability = measure_postselect(g.qubit, p->outcome);
                       } else {
                           if (rng == nullptr) {
                               throw std::invalid_argument("sampled measurement needs an rng");
                           }
                           const double p1 = probability_of(g.qubit, 1);
                           rec.outcome = measure_sample(g.qubit, *rng);
                           rec.probability = rec.outcome ? p1 : 1.0 - p1;
                       }
                       if (rec.outcome == 1) {
                           apply_x(g.qubit);
                       }
                       records.push_back(rec);
                   },
               },
               op);
    if (is_unitary(op)) {
        check_norm(describe(op).c_str());
    }
    return records;
}

Statevector new_zero_state(std::size_t num_qubits) {
    return Statevector::zero(num_qubits);
}

Statevector from_amplitudes(std::span<const Complex> raw) {
    return Statevector::from_amplitudes(raw);
}

void apply(Statevector &state, const GateOp &op) {
    state.apply(op);
}

void apply_mcx(Statevector &state, std::span<const Control> controls, std::size_t target) {
    state.apply_mcx(controls, target);
}

double measure_postselect(Statevector &state, std::size_t qubit, int outcome) {
    return state.measure_postselect(qubit, outcome);
}

int measure_sample(Statevector &state, std::size_t qubit, std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return state.measure_sample(qubit, rng);
}

}  // namespace qht
