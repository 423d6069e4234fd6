// Copyright 2026 The muub-kit Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace muub {

enum class ErrorCode {
    InvalidDimension,
    DimensionMismatch,
    IndexOutOfRange,
    NotUnitaryFamily,
    NotUnitary,
    SameBasis,
    DegenerateFamily,
    InvalidState,
    Unrepresentable,
    ParseError,
};

constexpr std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidDimension: return "InvalidDimension";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotUnitaryFamily: return "NotUnitaryFamily";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::SameBasis: return "SameBasis";
        case ErrorCode::DegenerateFamily: return "DegenerateFamily";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::Unrepresentable: return "Unrepresentable";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace muub
