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

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qht/error.h"

namespace qht {

std::vector<Complex> dft_bruteforce(std::span<const Complex> x) {
    const std::size_t len = x.size();
    std::vector<Complex> out(len);
    for (std::size_t w = 0; w < len; ++w) {
        Complex acc = 0;
        for (std::size_t j = 0; j < len; ++j) {
            // Reduce j*w mod N first so the angle stays small and exact.
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * w) % len) / static_cast<double>(len);
            acc += x[j] * std::polar(1.0, angle);
        }
        out[w] = acc;
    }
    return out;
}

std::vector<Complex> fft(std::span<const Complex> x, bool inverse) {
    const std::size_t len = x.size();
    if (len == 0 || !std::has_single_bit(len)) {
        throw QhtError(ErrorCode::NonPowerOfTwoLength, "fft length " + std::to_string(len));
    }
    std::vector<Complex> a(x.begin(), x.end());
    const int bits = std::countr_zero(len);
    for (std::size_t i = 0; i < len; ++i) {
        std::size_t rev = 0;
        for (int b = 0; b < bits; ++b) {
            rev |= ((i >> b) & 1U) << (bits - 1 - b);
        }
        if (i < rev) {
            std::swap(a[i], a[rev]);
        }
    }
    const double sign = inverse ? 1.0 : -1.0;
    for (std::size_t half = 1; half < len; half <<= 1) {
        const std::size_t span = half << 1;
        for (std::size_t k = 0; k < half; ++k) {
            // Twiddles computed per index rather than by repeated
            // multiplication to keep rounding error flat in N.
            const Complex w = std::polar(1.0, sign * std::numbers::pi * static_cast<double>(k) / static_cast<double>(half));
            for (std::size_t start = 0; start < len; start += span) {
                const Complex u = a[start + k];
                const Complex v = a[start + k + half] * w;
                a[start + k] = u + v;
                a[start + k + half] = u - v;
            }
        }
    }
    if (inverse) {
        const double inv = 1.0 / static_cast<double>(len);
        for (auto &v : a) {
            v *= inv;
        }
    }
    return a;
}

SignalTensor fft_nd(const SignalTensor &t, bool inverse) {
    const std::size_t d = t.dims();
    const std::size_t side = t.side();
    SignalTensor out = t;
    std::vector<Complex> line(side);
    for (std::size_t axis = 0; axis < d; ++axis) {
        const std::size_t stride = std::size_t{1} << (t.bits() * (d - 1 - axis));
        const std::size_t block = stride * side;
        for (std::size_t outer = 0; outer < t.size(); outer += block) {
            for (std::size_t inner = 0; inner < stride; ++inner) {
                const std::size_t base = outer + inner;
                for (std::size_t k = 0; k < side; ++k) {
                    line[k] = out[base + k * stride];
                }
                const auto transformed = fft(line, inverse);
                for (std::size_t k = 0; k < side; ++k) {
                    out[base + k * stride] = transformed[k];
                }
            }
        }
    }
    return out;
}

Complex hilbert_multiplier(std::size_t w, std::size_t side) {
    if (w == 0) {
        return 0.0;
    }
    return w <= side / 2 ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
}

bool is_dc_bin(std::size_t flat_index, std::size_t d, std::size_t n) {
    const std::size_t mask = (std::size_t{1} << n) - 1;
    for (std::size_t m = 0; m < d; ++m) {
        if (((flat_index >> (m * n)) & mask) == 0) {
            return true;
        }
    }
    return false;
}

SignalTensor dht_classical(const SignalTensor &t) {
    SignalTensor spectrum = fft_nd(t, false);
    const std::size_t d = t.dims();
    const std::size_t n = t.bits();
    const std::size_t side = t.side();
    for (std::size_t i = 0; i < spectrum.size(); ++i) {
        Complex factor = 1.0;
        for (std::size_t m = 0; m < d; ++m) {
            factor *= hilbert_multiplier((i >> (m * n)) & (side - 1), side);
        }
        spectrum[i] *= factor;
    }
    SignalTensor out = fft_nd(spectrum, true);
    out.set_scale(1.0);
    return out;
}

AnalyticPair analytic_pair(double x) {
    const double r = 1.0 / std::numbers::sqrt2;
    const double decay = std::exp(-r);
    const double x2 = x * x;
    const double denom = 1.0 + x2 * x2;
    return {std::sin(x) / denom, (decay * std::cos(r) + decay * std::sin(r) * x2 - std::cos(x)) / denom};
}

std::vector<double> centered_grid(std::size_t num_points, double step) {
    std::vector<double> xs(num_points);
    const auto half = static_cast<double>(num_points / 2);
    for (std::size_t k = 0; k < num_points; ++k) {
        xs[k] = (static_cast<double>(k) - half) * step;
    }
    return xs;
}

std::vector<double> envelope(std::span<const double> f) {
    const std::size_t len = f.size();
    if (len == 0 || !std::has_single_bit(len)) {
        throw QhtError(ErrorCode::NonPowerOfTwoLength, "envelope length " + std::to_string(len));
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(len));
    const auto hf = dht_classical(SignalTensor::from_real(1, n, f));
    std::vector<double> ia(len);
    for (std::size_t k = 0; k < len; ++k) {
        ia[k] = std::hypot(f[k], hf[k].real());
    }
    return ia;
}

double fidelity(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        throw QhtError(ErrorCode::ShapeMismatch, "fidelity of vectors with different lengths");
    }
    double na = 0;
    double nb = 0;
    Complex overlap = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        na += std::norm(a[i]);
        nb += std::norm(b[i]);
        overlap += std::conj(a[i]) * b[i];
    }
    if (!(na > 0) || !(nb > 0)) {
        throw QhtError(ErrorCode::ZeroNorm, "fidelity with a zero vector");
    }
    const double f = std::norm(overlap) / (na * nb);
    return std::min(1.0, f);
}

}  // namespace qht
