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

#include "gtest/gtest.h"
#include "qht/classical.h"
#include "qht/error.h"
#include "test_util.h"

using namespace qht;
using qht::testing::max_abs_diff;
using qht::testing::normalized;
using qht::testing::random_state;
using qht::testing::random_tensor;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> q(n);
    for (std::size_t i = 0; i < n; ++i) {
        q[i] = i;
    }
    return q;
}

void run_ops(Statevector &s, const std::vector<GateOp> &ops) {
    for (const auto &op : ops) {
        s.apply(op);
    }
}

template <class T>
std::size_t count_kind(const std::vector<GateOp> &ops) {
    std::size_t c = 0;
    for (const auto &op : ops) {
        c += std::holds_alternative<T>(op) ? 1 : 0;
    }
    return c;
}

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const QhtError &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected a QhtError";
    return ErrorCode::Io;
}

// Unit-normalized classical transform, the reference for run_qht.
std::vector<Complex> oracle(const SignalTensor &f) {
    const auto h = dht_classical(f);
    return normalized(h.data());
}

// Adds c * (all-ones) mass along the first axis so DC bins carry energy.
SignalTensor with_dc(SignalTensor f, double c) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] += c;
    }
    return f;
}

}  // namespace

TEST(qft, matches_dft_kernel) {
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::size_t side = std::size_t{1} << n;
        const auto ops = build_qft(iota(n));
        for (std::size_t k = 0; k < side; ++k) {
            std::vector<Complex> raw(side);
            raw[k] = 1.0;
            auto s = Statevector::from_amplitudes(raw);
            run_ops(s, ops);
            for (std::size_t j = 0; j < side; ++j) {
                const Complex expected = std::polar(1.0 / std::sqrt(side), 2 * kPi * ((j * k) % side) / side);
                EXPECT_NEAR(std::abs(s[j] - expected), 0.0, 1e-12) << "n=" << n << " k=" << k << " j=" << j;
            }
        }
    }
}

TEST(qft, examples) {
    const auto one = build_qft(iota(1));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], GateOp(gate::H{0}));

    std::vector<Complex> raw{0.0, 1.0, 0.0, 0.0};
    auto s = Statevector::from_amplitudes(raw);
    run_ops(s, build_qft(iota(2)));
    const std::vector<Complex> expected{0.5, Complex(0, 0.5), -0.5, Complex(0, -0.5)};
    EXPECT_LT(max_abs_diff(s.amplitudes(), expected), 1e-15);

    const auto three = build_qft(iota(3));
    EXPECT_EQ(count_kind<gate::H>(three), 3u);
    EXPECT_EQ(count_kind<gate::CPhase>(three), 3u);
    EXPECT_EQ(count_kind<gate::Swap>(three), 1u);
    EXPECT_EQ(three.size(), 7u);

    for (std::size_t n = 1; n <= 8; ++n) {
        const auto ops = build_qft(iota(n));
        EXPECT_EQ(count_kind<gate::H>(ops), n);
        EXPECT_EQ(count_kind<gate::CPhase>(ops), n * (n - 1) / 2);
        EXPECT_EQ(count_kind<gate::Swap>(ops), n / 2);
    }

    EXPECT_EQ(code_of([] { build_qft({}); }), ErrorCode::EmptyRegister);
    EXPECT_EQ(code_of([] { build_iqft({}); }), ErrorCode::EmptyRegister);
}

TEST(qft, inverse_examples) {
    const auto one = build_iqft(iota(1));
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0], GateOp(gate::H{0}));

    std::vector<Complex> raw{0.5, Complex(0, 0.5), -0.5, Complex(0, -0.5)};
    auto s = Statevector::from_amplitudes(raw);
    run_ops(s, build_iqft(iota(2)));
    const std::vector<Complex> expected{0.0, 1.0, 0.0, 0.0};
    EXPECT_LT(max_abs_diff(s.amplitudes(), expected), 1e-15);
}

TEST(qft, round_trip_and_parseval) {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        auto s = random_state(n, rng);
        const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
        run_ops(s, build_qft(iota(n)));
        EXPECT_NEAR(s.norm(), 1.0, 1e-12);
        run_ops(s, build_iqft(iota(n)));
        EXPECT_LT(max_abs_diff(s.amplitudes(), before), 1e-12);
    }
}

TEST(qft, acts_on_register_inside_larger_state) {
    // QFT on qubits {2, 3, 4} of a 6-qubit state equals the DFT kernel on
    // that bit field with other bits as spectators.
    Rng rng(13);
    auto s = random_state(6, rng);
    const std::vector<Complex> before(s.amplitudes().begin(), s.amplitudes().end());
    const std::vector<std::size_t> reg{2, 3, 4};
    run_ops(s, build_qft(reg));
    for (std::size_t i = 0; i < 64; ++i) {
        const std::size_t j = (i >> 2) & 7;
        Complex expected = 0;
        for (std::size_t k = 0; k < 8; ++k) {
            const std::size_t src = (i & ~(std::size_t{7} << 2)) | (k << 2);
            expected += before[src] * std::polar(1.0 / std::sqrt(8.0), 2 * kPi * ((j * k) % 8) / 8);
        }
        EXPECT_NEAR(std::abs(s[i] - expected), 0.0, 1e-12);
    }
}

TEST(dc_removal, examples) {
    const auto l11 = RegisterLayout::make(2, 1, QhtMode::Dynamic);
    const auto ops = build_dc_removal(l11, QhtMode::Dynamic);
    ASSERT_EQ(ops.size(), 2u);
    const gate::Mcx expected_mcx{{{0, Polarity::Negative}, {1, Polarity::Negative}}, 2};
    EXPECT_EQ(ops[0], GateOp(expected_mcx));
    EXPECT_EQ(ops[1], GateOp(gate::MeasureReset{2, gate::Postselect{0}}));

    const auto dyn = build_dc_removal(RegisterLayout::make(3, 2, QhtMode::Dynamic), QhtMode::Dynamic);
    ASSERT_EQ(dyn.size(), 4u);
    EXPECT_EQ(std::get<gate::Mcx>(dyn[0]).target, 6u);
    EXPECT_EQ(std::get<gate::Mcx>(dyn[2]).target, 6u);
    EXPECT_EQ(std::get<gate::MeasureReset>(dyn[1]).qubit, 6u);
    EXPECT_EQ(std::get<gate::MeasureReset>(dyn[3]).qubit, 6u);

    const auto st = build_dc_removal(RegisterLayout::make(3, 2, QhtMode::Static), QhtMode::Static);
    ASSERT_EQ(st.size(), 4u);
    EXPECT_EQ(std::get<gate::Mcx>(st[0]).target, 6u);
    EXPECT_EQ(std::get<gate::Mcx>(st[2]).target, 7u);
    EXPECT_EQ(std::get<gate::MeasureReset>(st[1]).qubit, 6u);
    EXPECT_EQ(std::get<gate::MeasureReset>(st[3]).qubit, 7u);

    EXPECT_EQ(code_of([] { build_dc_removal(RegisterLayout::make(3, 2, QhtMode::Dynamic), QhtMode::Static); }),
              ErrorCode::LayoutMismatch);
}

TEST(qht_circuit, examples) {
    const auto minimal = build_qht_circuit(1, 1, QhtMode::Dynamic);
    const std::vector<GateOp> expected{
        gate::H{0},
        gate::Mcx{{{0, Polarity::Negative}}, 1},
        gate::MeasureReset{1, gate::Postselect{0}},
        gate::Z{0},
        gate::H{0},
    };
    EXPECT_EQ(minimal.ops, expected);
    EXPECT_EQ(minimal.num_qubits, 2u);

    const auto c32 = build_qht_circuit(3, 2, QhtMode::Dynamic);
    const std::size_t qft3 = 3 + 3 + 1;
    EXPECT_EQ(c32.ops.size(), 2 * qft3 + 2 + 2 + 2 + 2 * qft3);
    EXPECT_EQ(count_kind<gate::Mcx>(c32.ops), 2u);
    EXPECT_EQ(count_kind<gate::MeasureReset>(c32.ops), 2u);
    EXPECT_EQ(count_kind<gate::Z>(c32.ops), 2u);

    const auto s23 = build_qht_circuit(2, 3, QhtMode::Static);
    EXPECT_EQ(s23.layout.ancilla_qubits.size(), 3u);
    EXPECT_EQ(s23.num_qubits, 9u);

    EXPECT_EQ(code_of([] { build_qht_circuit(10, 3, QhtMode::Dynamic); }), ErrorCode::QubitCountOutOfRange);
    EXPECT_EQ(code_of([] { build_qht_circuit(0, 1, QhtMode::Dynamic); }), ErrorCode::EmptyRegister);
    // The static analysis path has no simulation guard.
    EXPECT_EQ(assemble_qht_circuit(16, 4, QhtMode::Static).num_qubits, 68u);
}

TEST(qht_circuit, z_targets_register_msb) {
    const auto c = build_qht_circuit(3, 2, QhtMode::Dynamic);
    std::vector<std::size_t> zs;
    for (const auto &op : c.ops) {
        if (const auto *z = std::get_if<gate::Z>(&op)) {
            zs.push_back(z->target);
        }
    }
    EXPECT_EQ(zs, (std::vector<std::size_t>{5, 2}));
}

TEST(encode, examples) {
    const auto l = RegisterLayout::make(1, 1, QhtMode::Dynamic);
    auto s = encode_tensor(SignalTensor::from_real(1, 1, std::vector<double>{1, 0}), l);
    EXPECT_EQ(s[0], Complex(1.0));
    EXPECT_NEAR(s.norm(), 1.0, 1e-15);

    const auto l2 = RegisterLayout::make(1, 2, QhtMode::Dynamic);
    auto s2 = encode_tensor(SignalTensor::from_real(2, 1, std::vector<double>{0, 1, 0, 0}), l2);
    // k1 = 0, k2 = 1: register 2 holds the low bit.
    EXPECT_EQ(s2[1], Complex(1.0));

    const auto l3 = RegisterLayout::make(2, 1, QhtMode::Dynamic);
    auto s3 = encode_tensor(SignalTensor::from_real(1, 2, std::vector<double>{3, 4, 0, 0}), l3);
    EXPECT_NEAR(s3[0].real(), 0.6, 1e-15);
    EXPECT_NEAR(s3[1].real(), 0.8, 1e-15);
    for (std::size_t i = 2; i < s3.size(); ++i) {
        EXPECT_EQ(s3[i], Complex(0.0));
    }

    EXPECT_EQ(code_of([&] { encode_tensor(SignalTensor::zeros(1, 2), l3); }), ErrorCode::ZeroNorm);
    EXPECT_EQ(code_of([&] { encode_tensor(SignalTensor::zeros(1, 3), l3); }), ErrorCode::ShapeMismatch);
}

TEST(run_qht, cosine_becomes_sine) {
    std::vector<double> f(8);
    for (std::size_t k = 0; k < 8; ++k) {
        f[k] = std::cos(2 * kPi * k / 8);
    }
    for (auto mode : {QhtMode::Dynamic, QhtMode::Static}) {
        const auto result = run_qht(SignalTensor::from_real(1, 3, f), mode);
        EXPECT_NEAR(result.success_probability, 1.0, 1e-12);
        for (std::size_t k = 0; k < 8; ++k) {
            // sin has norm 2 on 8 points.
            EXPECT_NEAR(std::abs(result.output[k] - std::sin(2 * kPi * k / 8) / 2.0), 0.0, 1e-12);
        }
        const auto restored = result.denormalized();
        for (std::size_t k = 0; k < 8; ++k) {
            EXPECT_NEAR(std::abs(restored[k] - std::sin(2 * kPi * k / 8)), 0.0, 1e-12);
        }
    }
}

TEST(run_qht, constant_input_fails_postselection) {
    for (auto mode : {QhtMode::Dynamic, QhtMode::Static}) {
        for (std::size_t d = 1; d <= 3; ++d) {
            auto f = SignalTensor::from_real(d, 2, std::vector<double>(std::size_t{1} << (2 * d), 0.7));
            EXPECT_EQ(code_of([&] { run_qht(f, mode); }), ErrorCode::PostselectionImpossible);
            EXPECT_NEAR(dc_fraction(f), 1.0, 1e-15);
        }
    }
}

TEST(run_qht, random_2d_fidelity) {
    Rng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_tensor(2, 3, rng);
        const auto result = run_qht(f);
        EXPECT_GE(fidelity(oracle(f), result.output.data()), 1.0 - 1e-9);
    }
}

TEST(run_qht, componentwise_exactness) {
    Rng rng(15);
    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::size_t n = 1; d * n <= 8; ++n) {
            for (int trial = 0; trial < 5; ++trial) {
                const auto f = random_tensor(d, n, rng);
                const auto result = run_qht(f);
                EXPECT_LT(max_abs_diff(result.output.data(), oracle(f)), 1e-9) << "d=" << d << " n=" << n;
                EXPECT_NEAR(result.output.frobenius_norm(), 1.0, 1e-12);
            }
        }
    }
}

TEST(run_qht, modes_agree) {
    Rng rng(16);
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto f = random_tensor(d, n, rng);
            const auto dyn = run_qht(f, QhtMode::Dynamic);
            const auto st = run_qht(f, QhtMode::Static);
            EXPECT_LT(max_abs_diff(dyn.output.data(), st.output.data()), 1e-12);
            EXPECT_NEAR(dyn.success_probability, st.success_probability, 1e-12);
        }
    }
}

TEST(run_qht, success_probability_is_one_minus_dc_fraction) {
    Rng rng(17);
    for (std::size_t d = 1; d <= 3; ++d) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (double dc : {0.0, 0.5, 3.0}) {
                const auto f = with_dc(random_tensor(d, n, rng), dc);
                const auto result = run_qht(f);
                EXPECT_NEAR(result.success_probability + dc_fraction(f), 1.0, 1e-12);
                double product = 1;
                for (const auto &m : result.measurements) {
                    product *= m.probability;
                }
                EXPECT_NEAR(product, result.success_probability, 1e-15);
                EXPECT_EQ(result.measurements.size(), d);
            }
        }
    }
}

TEST(run_qht, output_has_no_dc_support) {
    Rng rng(18);
    for (std::size_t d = 1; d <= 3; ++d) {
        const auto f = with_dc(random_tensor(d, 2, rng), 1.0);
        const auto spectrum = fft_nd(run_qht(f).output);
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            if (is_dc_bin(i, d, 2)) {
                EXPECT_LT(std::abs(spectrum[i]), 1e-10);
            }
        }
    }
}

TEST(run_qht, sampled_trials_reach_postselected_state) {
    Rng rng(19);
    const auto f = with_dc(random_tensor(2, 2, rng), 0.8);
    const auto exact = run_qht(f);
    const auto a = run_qht_sampled(f, QhtMode::Dynamic, 42);
    const auto b = run_qht_sampled(f, QhtMode::Dynamic, 42);
    EXPECT_EQ(a.trials, b.trials);
    EXPECT_GE(a.trials, 1u);
    EXPECT_LT(max_abs_diff(a.result.output.data(), exact.output.data()), 1e-12);
    EXPECT_NEAR(a.result.success_probability, exact.success_probability, 1e-12);

    // Mean trial count approaches 1 / (1 - p).
    double total = 0;
    const int runs = 2000;
    for (int seed = 0; seed < runs; ++seed) {
        total += static_cast<double>(run_qht_sampled(f, QhtMode::Static, seed).trials);
    }
    const double expected = 1.0 / exact.success_probability;
    EXPECT_NEAR(total / runs, expected, 0.1 * expected);

    const auto constant = SignalTensor::from_real(1, 2, std::vector<double>(4, 1.0));
    EXPECT_EQ(code_of([&] { run_qht_sampled(constant, QhtMode::Dynamic, 1, 50); }),
              ErrorCode::PostselectionImpossible);
}

TEST(dc_fraction, examples) {
    EXPECT_NEAR(dc_fraction(SignalTensor::from_real(1, 3, std::vector<double>(8, 2.0))), 1.0, 1e-15);
    EXPECT_NEAR(dc_fraction(SignalTensor::from_real(1, 2, std::vector<double>{1, -2, 3, -2})), 0.0, 1e-15);
    std::vector<double> product(64);
    for (std::size_t x = 0; x < 8; ++x) {
        for (std::size_t y = 0; y < 8; ++y) {
            product[x * 8 + y] = std::cos(2 * kPi * x / 8) * std::cos(2 * kPi * y / 8);
        }
    }
    EXPECT_NEAR(dc_fraction(SignalTensor::from_real(2, 3, product)), 0.0, 1e-15);
    EXPECT_EQ(code_of([] { dc_fraction(SignalTensor::zeros(1, 2)); }), ErrorCode::ZeroNorm);
}
