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

#ifndef QHT_ERROR_H
#define QHT_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace qht {

enum class ErrorCode {
    QubitCountOutOfRange,
    ZeroNorm,
    NonPowerOfTwoLength,
    InvalidQubitIndex,
    DuplicateQubit,
    PostselectionImpossible,
    EmptyRegister,
    LayoutMismatch,
    ShapeMismatch,
    UnsupportedGate,
    EmptyInput,
    NonNumericRow,
    BadPgmHeader,
    NonSquareImage,
    NonPowerOfTwoSide,
    Io,
};

std::string_view error_code_name(ErrorCode code);

/// Every recoverable failure in the library is reported as a QhtError carrying
/// one of the codes above. Logic errors (kernel bugs) use std::logic_error.
class QhtError : public std::runtime_error {
   public:
    QhtError(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace qht

#endif
