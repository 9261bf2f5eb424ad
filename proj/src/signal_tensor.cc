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

#include "qht/signal_tensor.h"

#include <cmath>
#include <string>

#include "qht/error.h"

namespace qht {

SignalTensor::SignalTensor(std::size_t d, std::size_t n, std::vector<Complex> data, double scale)
    : d_(d), n_(n), data_(std::move(data)), scale_(scale) {
    if (d == 0 || d * n > kDefaultMaxQubits) {
        throw QhtError(ErrorCode::ShapeMismatch,
                       "tensor with d=" + std::to_string(d) + ", n=" + std::to_string(n) + " is out of range");
    }
    if (data_.size() != std::size_t{1} << (d * n)) {
        throw QhtError(ErrorCode::ShapeMismatch, "expected " + std::to_string(std::size_t{1} << (d * n)) +
                                                     " entries, got " + std::to_string(data_.size()));
    }
}

SignalTensor SignalTensor::from_real(std::size_t d, std::size_t n, std::span<const double> values) {
    return SignalTensor(d, n, std::vector<Complex>(values.begin(), values.end()));
}

SignalTensor SignalTensor::zeros(std::size_t d, std::size_t n) {
    if (d == 0 || d * n > kDefaultMaxQubits) {
        throw QhtError(ErrorCode::ShapeMismatch, "tensor shape out of range");
    }
    return SignalTensor(d, n, std::vector<Complex>(std::size_t{1} << (d * n)));
}

std::size_t SignalTensor::offset(std::span<const std::size_t> index) const {
    if (index.size() != d_) {
        throw QhtError(ErrorCode::ShapeMismatch, "index rank differs from tensor order");
    }
    std::size_t flat = 0;
    for (std::size_t k : index) {
        if (k >= side()) {
            throw QhtError(ErrorCode::ShapeMismatch, "index out of range");
        }
        flat = (flat << n_) | k;
    }
    return flat;
}

double SignalTensor::frobenius_norm() const {
    double sum = 0;
    for (const auto &v : data_) {
        sum += std::norm(v);
    }
    return std::sqrt(sum);
}

std::vector<double> SignalTensor::real_part() const {
    std::vector<double> out(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out[i] = data_[i].real();
    }
    return out;
}

std::vector<double> SignalTensor::magnitude() const {
    std::vector<double> out(data_.size());
    for (std::size_t i = 0; i < data_.size(); ++i) {
        out[i] = std::abs(data_[i]);
    }
    return out;
}

}  // namespace qht
