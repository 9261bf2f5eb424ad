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

#ifndef QHT_CLASSICAL_H
#define QHT_CLASSICAL_H

#include <cstddef>
#include <span>
#include <vector>

#include "qht/signal_tensor.h"

namespace qht {

/// X_w = sum_j x_j e^{-2 pi i j w / N}, evaluated directly in O(N^2).
std::vector<Complex> dft_bruteforce(std::span<const Complex> x);

/// Iterative radix-2 FFT. Forward is unnormalized with kernel e^{-2 pi i jw/N};
/// inverse uses the conjugate kernel and divides by N.
std::vector<Complex> fft(std::span<const Complex> x, bool inverse = false);

/// fft along every axis of t.
SignalTensor fft_nd(const SignalTensor &t, bool inverse = false);

/// Per-axis Hilbert multiplier for frequency bin w of an N-point forward DFT:
/// 0 at DC, -i for 1 <= w <= N/2, +i above N/2.
Complex hilbert_multiplier(std::size_t w, std::size_t side);

/// d-dimensional discrete Hilbert transform: forward FFT, multiply bin
/// (w_1..w_d) by prod_m hilbert_multiplier(w_m), inverse FFT.
SignalTensor dht_classical(const SignalTensor &t);

struct AnalyticPair {
    double f;
    double hf;
};

/// Test function sin(x)/(1+x^4) and its closed-form Hilbert transform.
AnalyticPair analytic_pair(double x);

/// x_k = (k - N/2) h for k = 0..N-1.
std::vector<double> centered_grid(std::size_t num_points, double step);

/// Instantaneous amplitude sqrt(f^2 + Re(H f)^2) for a real signal.
std::vector<double> envelope(std::span<const double> f);

/// |<a/|a|, b/|b|>|^2.
double fidelity(std::span<const Complex> a, std::span<const Complex> b);

/// True when bin (w_1..w_d) of a flat row-major index has any w_m == 0.
bool is_dc_bin(std::size_t flat_index, std::size_t d, std::size_t n);

}  // namespace qht

#endif
