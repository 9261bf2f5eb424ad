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

#ifndef QHT_SIGNAL_TENSOR_H
#define QHT_SIGNAL_TENSOR_H

#include <cstddef>
#include <span>
#include <vector>

#include "qht/statevector.h"

namespace qht {

/// Order-d tensor with side N = 2^n, stored row-major (last index fastest).
class SignalTensor {
   public:
    SignalTensor() = default;
    /// Throws ShapeMismatch unless data.size() == N^d and d*n <= 30.
    SignalTensor(std::size_t d, std::size_t n, std::vector<Complex> data, double scale = 1.0);

    static SignalTensor from_real(std::size_t d, std::size_t n, std::span<const double> values);
    static SignalTensor zeros(std::size_t d, std::size_t n);

    std::size_t dims() const noexcept {
        return d_;
    }
    std::size_t bits() const noexcept {
        return n_;
    }
    std::size_t side() const noexcept {
        return std::size_t{1} << n_;
    }
    std::size_t size() const noexcept {
        return data_.size();
    }
    /// Frobenius norm recorded when this tensor was produced by normalization.
    double scale() const noexcept {
        return scale_;
    }
    void set_scale(double scale) noexcept {
        scale_ = scale;
    }

    std::span<const Complex> data() const noexcept {
        return data_;
    }
    std::span<Complex> data() noexcept {
        return data_;
    }
    Complex &operator[](std::size_t i) {
        return data_[i];
    }
    const Complex &operator[](std::size_t i) const {
        return data_[i];
    }

    /// Flat offset of (k_1, ..., k_d).
    std::size_t offset(std::span<const std::size_t> index) const;

    double frobenius_norm() const;
    std::vector<double> real_part() const;
    std::vector<double> magnitude() const;
    bool same_shape(const SignalTensor &other) const {
        return d_ == other.d_ && n_ == other.n_;
    }

   private:
    std::size_t d_ = 0;
    std::size_t n_ = 0;
    std::vector<Complex> data_;
    double scale_ = 1.0;
};

}  // namespace qht

#endif
