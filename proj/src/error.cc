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

#include "qht/error.h"

namespace qht {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::QubitCountOutOfRange:
            return "QubitCountOutOfRange";
        case ErrorCode::ZeroNorm:
            return "ZeroNorm";
        case ErrorCode::NonPowerOfTwoLength:
            return "NonPowerOfTwoLength";
        case ErrorCode::InvalidQubitIndex:
            return "InvalidQubitIndex";
        case ErrorCode::DuplicateQubit:
            return "DuplicateQubit";
        case ErrorCode::PostselectionImpossible:
            return "PostselectionImpossible";
        case ErrorCode::EmptyRegister:
            return "EmptyRegister";
        case ErrorCode::LayoutMismatch:
            return "LayoutMismatch";
        case ErrorCode::ShapeMismatch:
            return "ShapeMismatch";
        case ErrorCode::UnsupportedGate:
            return "UnsupportedGate";
        case ErrorCode::EmptyInput:
            return "EmptyInput";
        case ErrorCode::NonNumericRow:
            return "NonNumericRow";
        case ErrorCode::BadPgmHeader:
            return "BadPgmHeader";
        case ErrorCode::NonSquareImage:
            return "NonSquareImage";
        case ErrorCode::NonPowerOfTwoSide:
            return "NonPowerOfTwoSide";
        case ErrorCode::Io:
            return "Io";
    }
    return "Unknown";
}

QhtError::QhtError(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

}  // namespace qht
