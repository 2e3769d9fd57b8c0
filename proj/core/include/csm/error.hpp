// Copyright 2026 The CSM Authors
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

namespace csm {

enum class ErrorKind {
    InvalidArgument,
    DependentInput,
    NotHermitian,
    NotOrthonormal,
    DimensionMismatch,
    ValueOutOfRange,
    NotInformationallyComplete,
    DimensionTooSmall,
    InvalidRayMap,
    HypothesisViolated,
    MissingGadget,
    FitFailed,
    MalformedDocument,
    BasisNotOrthogonal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `what()` is prefixed with the kind
/// name, e.g. "NotInformationallyComplete: design rank 3 < 9".
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string &detail() const noexcept { return detail_; }

  private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace csm
