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

#include "qht/classical.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "qht/error.h"
#include "test_util.h"

using namespace qht;
using qht::testing::max_abs_diff;
using qht::testing::random_complex;
using qht::testing::random_real;
using qht::testing::random_tensor;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Complex> complexify(std::initializer_list<double> xs) {
    return std::vector<Complex>(xs.begin(), xs.end());
}

// Direct evaluation of the d = 2 Fourier sum, independent of fft().
std::vector<Complex> dft2_direct(const SignalTensor &t) {
    const std::size_t side = t.side();
    std::vector<Complex> out(t.size());
    for (std::size_t w1 = 0; w1 < side; ++w1) {
        for (std::size_t w2 = 0; w2 < side; ++w2) {
            Complex acc = 0;
            for (std::size_t j1 = 0; j1 < side; ++j1) {
                for (std::size_t j2 = 0; j2 < side; ++j2) {
                    const double angle = -2 * kPi * static_cast<double>((j1 * w1 + j2 * w2) % side) / side;
                    acc += t[j1 * side + j2] * std::polar(1.0, angle);
                }
            }
            out[w1 * side + w2] = acc;
        }
    }
    return out;
}

SignalTensor cos_grid(std::size_t n, double amplitude = 1.0, std::size_t cycles = 1) {
    const std::size_t side = std::size_t{1} << n;
    std::vector<double> f(side);
    for (std::size_t k = 0; k < side; ++k) {
        f[k] = amplitude * std::cos(2 * kPi * static_cast<double>(cycles * k) / side);
    }
    return SignalTensor::from_real(1, n, f);
}

}  // namespace

TEST(classical, dft_bruteforce_examples) {
    EXPECT_LT(max_abs_diff(dft_bruteforce(complexify({1, 1, 1, 1})), complexify({4, 0, 0, 0})), 1e-14);
    EXPECT_LT(max_abs_diff(dft_bruteforce(complexify({1, 0, 0, 0})), complexify({1, 1, 1, 1})), 1e-14);
    const std::vector<Complex> expected{0.0, Complex(0, -2), 0.0, Complex(0, 2)};
    EXPECT_LT(max_abs_diff(dft_bruteforce(complexify({0, 1, 0, -1})), expected), 1e-14);
}

TEST(classical, fft_matches_bruteforce) {
    Rng rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        for (std::size_t len = 1; len <= 64; len <<= 1) {
            const auto x = random_complex(len, rng);
            EXPECT_LT(max_abs_diff(fft(x), dft_bruteforce(x)), 1e-10) << "N=" << len;
        }
    }
    EXPECT_LT(max_abs_diff(fft(complexify({1, 1, 1, 1})), complexify({4, 0, 0, 0})), 1e-15);
}

TEST(classical, fft_round_trip_and_parseval) {
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_complex(32, rng);
        EXPECT_LT(max_abs_diff(fft(fft(x, true)), x), 1e-12);
        EXPECT_LT(max_abs_diff(fft(fft(x), true), x), 1e-12);
        double energy = 0;
        double spectral = 0;
        const auto spectrum = fft(x);
        for (std::size_t i = 0; i < x.size(); ++i) {
            energy += std::norm(x[i]);
            spectral += std::norm(spectrum[i]);
        }
        EXPECT_NEAR(spectral / (32 * energy), 1.0, 1e-10);
    }
}

TEST(classical, fft_rejects_bad_length) {
    const std::vector<Complex> three(3, 1.0);
    try {
        fft(three);
        FAIL();
    } catch (const QhtError &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPowerOfTwoLength);
    }
}

TEST(classical, fft_nd_examples) {
    auto constant = SignalTensor::from_real(2, 2, std::vector<double>(16, 1.0));
    const auto spectrum = fft_nd(constant);
    EXPECT_NEAR(std::abs(spectrum[0] - 16.0), 0.0, 1e-13);
    for (std::size_t i = 1; i < 16; ++i) {
        EXPECT_LT(std::abs(spectrum[i]), 1e-13);
    }

    Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto t = random_tensor(2, 2, rng);
        EXPECT_LT(max_abs_diff(fft_nd(t).data(), dft2_direct(t)), 1e-10);
    }

    // Separable f(x, y) = g(x) h(y) -> spectrum g^ (x) h^.
    const auto g = random_complex(8, rng);
    const auto h = random_complex(8, rng);
    std::vector<Complex> outer(64);
    for (std::size_t x = 0; x < 8; ++x) {
        for (std::size_t y = 0; y < 8; ++y) {
            outer[x * 8 + y] = g[x] * h[y];
        }
    }
    const auto gh = dft_bruteforce(g);
    const auto hh = dft_bruteforce(h);
    std::vector<Complex> expected(64);
    for (std::size_t x = 0; x < 8; ++x) {
        for (std::size_t y = 0; y < 8; ++y) {
            expected[x * 8 + y] = gh[x] * hh[y];
        }
    }
    EXPECT_LT(max_abs_diff(fft_nd(SignalTensor(2, 3, outer)).data(), expected), 1e-10);
}

TEST(classical, hilbert_multiplier_layout) {
    EXPECT_EQ(hilbert_multiplier(0, 8), Complex(0.0));
    for (std::size_t w = 1; w <= 4; ++w) {
        EXPECT_EQ(hilbert_multiplier(w, 8), Complex(0.0, -1.0)) << w;
    }
    for (std::size_t w = 5; w < 8; ++w) {
        EXPECT_EQ(hilbert_multiplier(w, 8), Complex(0.0, 1.0)) << w;
    }
}

TEST(classical, dht_cos_is_sin) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const std::size_t side = std::size_t{1} << n;
        const auto hf = dht_classical(cos_grid(n));
        for (std::size_t k = 0; k < side; ++k) {
            EXPECT_NEAR(std::abs(hf[k] - std::sin(2 * kPi * k / side)), 0.0, 1e-12);
        }
    }
}

TEST(classical, dht_constant_is_zero) {
    auto c = SignalTensor::from_real(2, 3, std::vector<double>(64, 2.5));
    const auto hc = dht_classical(c);
    for (const auto &v : hc.data()) {
        EXPECT_LT(std::abs(v), 1e-14);
    }
}

TEST(classical, dht_real_without_nyquist_content) {
    Rng rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        const auto raw = random_real(64, rng);
        // Drop the Nyquist bin so the (imaginary) Nyquist multiplier has
        // nothing to act on.
        auto spectrum = fft(std::vector<Complex>(raw.begin(), raw.end()));
        spectrum[32] = 0.0;
        const auto f = fft(spectrum, true);
        std::vector<double> real(64);
        for (std::size_t i = 0; i < 64; ++i) {
            real[i] = f[i].real();
        }
        const auto hf = dht_classical(SignalTensor::from_real(1, 6, real));
        for (const auto &v : hf.data()) {
            EXPECT_LT(std::abs(v.imag()), 1e-10);
        }
    }
}

TEST(classical, dht_nyquist_bin_is_imaginary) {
    // (-1)^k sits entirely in the Nyquist bin; its image is -i (-1)^k.
    std::vector<double> alt(16);
    for (std::size_t k = 0; k < 16; ++k) {
        alt[k] = k % 2 ? -1.0 : 1.0;
    }
    const auto hf = dht_classical(SignalTensor::from_real(1, 4, alt));
    for (std::size_t k = 0; k < 16; ++k) {
        EXPECT_NEAR(std::abs(hf[k] - Complex(0.0, -alt[k])), 0.0, 1e-13);
    }
}

TEST(classical, dht_twice_negates_zero_mean) {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_real(128, rng);
        double mean = 0;
        for (double v : f) {
            mean += v / 128;
        }
        for (double &v : f) {
            v -= mean;
        }
        const auto once = dht_classical(SignalTensor::from_real(1, 7, f));
        const auto twice = dht_classical(once);
        for (std::size_t k = 0; k < 128; ++k) {
            EXPECT_NEAR(std::abs(twice[k] + f[k]), 0.0, 1e-10);
        }
    }
}

TEST(classical, dht_linearity) {
    Rng rng(6);
    const double alpha = 1.7;
    const double beta = -0.4;
    for (int trial = 0; trial < 10; ++trial) {
        auto f = random_tensor(2, 3, rng);
        auto g = random_tensor(2, 3, rng);
        SignalTensor mix = f;
        for (std::size_t i = 0; i < mix.size(); ++i) {
            mix[i] = alpha * f[i] + beta * g[i];
        }
        const auto hf = dht_classical(f);
        const auto hg = dht_classical(g);
        const auto hm = dht_classical(mix);
        for (std::size_t i = 0; i < mix.size(); ++i) {
            EXPECT_NEAR(std::abs(hm[i] - (alpha * hf[i] + beta * hg[i])), 0.0, 1e-10);
        }
    }
}

TEST(classical, dht_output_has_no_dc_support) {
    Rng rng(8);
    for (std::size_t d = 1; d <= 3; ++d) {
        auto f = random_tensor(d, 2, rng);
        const auto spectrum = fft_nd(dht_classical(f));
        for (std::size_t i = 0; i < spectrum.size(); ++i) {
            if (is_dc_bin(i, d, 2)) {
                EXPECT_LT(std::abs(spectrum[i]), 1e-10);
            }
        }
    }
}

TEST(classical, dht_involution_on_dc_free_tensors) {
    Rng rng(9);
    for (std::size_t d = 1; d <= 3; ++d) {
        for (int trial = 0; trial < 5; ++trial) {
            auto f = random_tensor(d, 3, rng);
            auto spectrum = fft_nd(f);
            for (std::size_t i = 0; i < spectrum.size(); ++i) {
                if (is_dc_bin(i, d, 3)) {
                    spectrum[i] = 0.0;
                }
            }
            const auto dc_free = fft_nd(spectrum, true);
            const auto twice = dht_classical(dht_classical(dc_free));
            const double sign = d % 2 ? -1.0 : 1.0;
            for (std::size_t i = 0; i < twice.size(); ++i) {
                EXPECT_NEAR(std::abs(twice[i] - sign * dc_free[i]), 0.0, 1e-9);
            }
        }
    }
}

TEST(classical, analytic_pair_values) {
    const auto origin = analytic_pair(0.0);
    EXPECT_EQ(origin.f, 0.0);
    const double r = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(origin.hf, std::exp(-r) * std::cos(r) - 1.0, 1e-15);
    EXPECT_NEAR(origin.hf, -0.625147, 1e-6);
    for (double x : {0.1, 0.5, 1.3, 2.0, 7.5}) {
        const auto pos = analytic_pair(x);
        const auto neg = analytic_pair(-x);
        EXPECT_EQ(neg.f, -pos.f);
        EXPECT_EQ(neg.hf, pos.hf);
    }
}

TEST(classical, analytic_interior_error_shrinks_with_window) {
    // Fixed step h = 0.01; growing N widens the window around x = 0.
    double previous = 1e300;
    for (std::size_t n : {6u, 7u, 8u}) {
        const std::size_t side = std::size_t{1} << n;
        const auto xs = centered_grid(side, 0.01);
        std::vector<double> f(side);
        for (std::size_t k = 0; k < side; ++k) {
            f[k] = analytic_pair(xs[k]).f;
        }
        const auto hf = dht_classical(SignalTensor::from_real(1, n, f));
        double sum = 0;
        std::size_t count = 0;
        for (std::size_t k = 0; k < side; ++k) {
            if (std::abs(xs[k]) <= 0.16) {
                const double err = hf[k].real() - analytic_pair(xs[k]).hf;
                sum += err * err;
                ++count;
            }
        }
        const double rms = std::sqrt(sum / count);
        EXPECT_LT(rms, previous) << "N=" << side;
        previous = rms;
    }
}

TEST(classical, centered_grid_contains_origin) {
    const auto xs = centered_grid(128, 0.01);
    EXPECT_EQ(xs[64], 0.0);
    EXPECT_NEAR(xs[0], -0.64, 1e-15);
    EXPECT_NEAR(xs[127], 0.63, 1e-15);
}

TEST(classical, envelope_examples) {
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto f = cos_grid(n).real_part();
        for (double ia : envelope(f)) {
            EXPECT_NEAR(ia, 1.0, 1e-12);
        }
        const auto g = cos_grid(n, 2.5, 2).real_part();
        for (double ia : envelope(g)) {
            EXPECT_NEAR(ia, 2.5, 1e-12);
        }
    }
    for (double ia : envelope(std::vector<double>(32, 0.0))) {
        EXPECT_EQ(ia, 0.0);
    }
    try {
        envelope(std::vector<double>(12, 1.0));
        FAIL();
    } catch (const QhtError &e) {
        EXPECT_EQ(e.code(), ErrorCode::NonPowerOfTwoLength);
    }
}

TEST(classical, fidelity_examples) {
    Rng rng(10);
    const auto a = random_complex(16, rng);
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-15);
    const auto rotated = [&] {
        std::vector<Complex> out(a);
        for (auto &v : out) {
            v *= std::polar(3.0, 1.234);
        }
        return out;
    }();
    EXPECT_NEAR(fidelity(a, rotated), 1.0, 1e-14);
    EXPECT_EQ(fidelity(complexify({1, 0}), complexify({0, 1})), 0.0);
    try {
        fidelity(complexify({0, 0}), complexify({1, 0}));
        FAIL();
    } catch (const QhtError &e) {
        EXPECT_EQ(e.code(), ErrorCode::ZeroNorm);
    }
}
