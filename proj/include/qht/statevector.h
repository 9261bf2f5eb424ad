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

#ifndef QHT_STATEVECTOR_H
#define QHT_STATEVECTOR_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace qht {

using Complex = std::complex<double>;
using Rng = std::mt19937_64;

/// Hard ceiling on simulated qubits unless QHT_MAX_QUBITS overrides it.
inline constexpr std::size_t kDefaultMaxQubits = 30;

/// Probability below which a postselected outcome is treated as impossible.
inline constexpr double kPostselectionFloor = 1e-12;

/// Tolerated deviation of the state norm from 1 after a unitary gate.
inline constexpr double kNormTolerance = 1e-10;

/// Current qubit guard: QHT_MAX_QUBITS if set to a positive integer, else 30.
std::size_t max_qubits();

/// Throws QubitCountOutOfRange unless 1 <= num_qubits <= max_qubits().
void check_qubit_count(std::size_t num_qubits);

enum class Polarity : std::uint8_t { Positive, Negative };

struct Control {
    std::size_t qubit;
    Polarity polarity;

    bool operator==(const Control &) const = default;
};

namespace gate {

struct H {
    std::size_t target;
    bool operator==(const H &) const = default;
};
struct X {
    std::size_t target;
    bool operator==(const X &) const = default;
};
struct Z {
    std::size_t target;
    bool operator==(const Z &) const = default;
};
/// diag(1, 1, 1, e^{i angle}) on (control, target).
struct CPhase {
    std::size_t control;
    std::size_t target;
    double angle;
    bool operator==(const CPhase &) const = default;
};
struct Swap {
    std::size_t a;
    std::size_t b;
    bool operator==(const Swap &) const = default;
};
struct Mcx {
    std::vector<Control> controls;
    std::size_t target;
    bool operator==(const Mcx &) const = default;
};

struct Postselect {
    int outcome;
    bool operator==(const Postselect &) const = default;
};
struct Sample {
    bool operator==(const Sample &) const = default;
};

/// Measure in the computational basis, then reset the qubit to |0>.
struct MeasureReset {
    std::size_t qubit;
    std::variant<Postselect, Sample> mode;
    bool operator==(const MeasureReset &) const = default;
};

}  // namespace gate

using GateOp = std::variant<gate::H, gate::CPhase, gate::Z, gate::X, gate::Swap, gate::Mcx, gate::MeasureReset>;

std::string describe(const GateOp &op);

/// Throws InvalidQubitIndex / DuplicateQubit if op does not fit num_qubits.
void validate(const GateOp &op, std::size_t num_qubits);

bool is_unitary(const GateOp &op);

/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Complex, 4>;

struct MeasurementRecord {
    std::size_t qubit;
    int outcome;
    double probability;
};

/// Dense statevector. Qubit 0 is the least significant bit of the basis index.
class Statevector {
   public:
    /// |0...0> on num_qubits qubits.
    static Statevector zero(std::size_t num_qubits);
    /// raw / ||raw||_2. Length must be a power of two >= 2.
    static Statevector from_amplitudes(std::span<const Complex> raw);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t size() const noexcept {
        return amps_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    const Complex &operator[](std::size_t index) const {
        return amps_[index];
    }

    double norm() const;
    double probability_of(std::size_t qubit, int outcome) const;

    void apply_h(std::size_t target);
    void apply_x(std::size_t target);
    void apply_z(std::size_t target);
    void apply_cphase(std::size_t control, std::size_t target, double angle);
    void apply_swap(std::size_t a, std::size_t b);
    void apply_cx(std::size_t control, std::size_t target);
    void apply_matrix(const Matrix2 &m, std::size_t target);
    void apply_mcx(std::span<const Control> controls, std::size_t target);

    /// Projects onto qubit == outcome and renormalizes. Returns the Born
    /// probability of that outcome. Throws PostselectionImpossible below
    /// kPostselectionFloor.
    double measure_postselect(std::size_t qubit, int outcome);
    /// Draws an outcome from the Born distribution and collapses.
    int measure_sample(std::size_t qubit, Rng &rng);

    /// Applies a gate. MeasureReset in sample mode requires rng. Returns the
    /// measurement record for MeasureReset ops.
    std::vector<MeasurementRecord> apply(const GateOp &op, Rng *rng = nullptr);

   private:
    Statevector(std::size_t num_qubits, std::vector<Complex> amps);

    void check_qubit(std::size_t q) const;
    void check_norm(const char *what) const;

    std::size_t num_qubits_;
    std::vector<Complex> amps_;
};

Statevector new_zero_state(std::size_t num_qubits);
Statevector from_amplitudes(std::span<const Complex> raw);
void apply(Statevector &state, const GateOp &op);
void apply_mcx(Statevector &state, std::span<const Control> controls, std::size_t target);
/// Returns the probability of `outcome`; state is projected and renormalized.
double measure_postselect(Statevector &state, std::size_t qubit, int outcome);
/// Seeded single-shot measurement.
int measure_sample(Statevector &state, std::size_t qubit, std::uint64_t rng_seed);

}  // namespace qht

#endif
