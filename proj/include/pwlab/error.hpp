// Copyright 2026 The pwlab Authors
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

#ifndef PWLAB_ERROR_HPP
#define PWLAB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pwlab {

enum class ErrorKind {
    NotUnitary,
    NotHermitian,
    DimensionMismatch,
    BadDimension,
    NotNormalized,
    NotCyclic,
    ZeroConditionalBlock,
    PictureMismatch,
    NotCommuting,
    DegenerateJointSpectrum,
    NotProductGrid,
    IncompatibleDimensions,
    InvalidHistory,
    LengthMismatch,
    IndexOutOfRange,
    InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failed precondition in the library is reported with one of these.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace pwlab

#endif  // PWLAB_ERROR_HPP
