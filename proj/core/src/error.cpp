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

#include "csm/error.hpp"

namespace csm {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument:
        return "InvalidArgument";
    case ErrorKind::DependentInput:
        return "DependentInput";
    case ErrorKind::NotHermitian:
        return "NotHermitian";
    case ErrorKind::NotOrthonormal:
        return "NotOrthonormal";
    case ErrorKind::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorKind::ValueOutOfRange:
        return "ValueOutOfRange";
    case ErrorKind::NotInformationallyComplete:
        return "NotInformationallyComplete";
    case ErrorKind::DimensionTooSmall:
        return "DimensionTooSmall";
    case ErrorKind::InvalidRayMap:
        return "InvalidRayMap";
    case ErrorKind::HypothesisViolated:
        return "HypothesisViolated";
    case ErrorKind::MissingGadget:
        return "MissingGadget";
    case ErrorKind::FitFailed:
        return "FitFailed";
    case ErrorKind::MalformedDocument:
        return "MalformedDocument";
    case ErrorKind::BasisNotOrthogonal:
        return "BasisNotOrthogonal";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
      kind_(kind), detail_(detail) {}

} // namespace csm
