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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "csm/model.hpp"

namespace csm {

struct MeasurementRecord {
    std::string context_label;
    int outcome = 0;
    Projector projector;
};

/// Draws an outcome index from `probabilities` by inverse CDF at `u` ∈ [0, 1).
/// Outcomes with probability ≤ tol.abs_eps are never selected; the remaining
/// mass is renormalized.
int sample_outcome(const RealVector &probabilities, double u, const Tolerance &tol = {});

/// Sequential measurement: the state starts as |ψ⟩⟨ψ| of `initial`; at each
/// context an outcome is drawn from the Born distribution and the state is
/// replaced by the obtained projector. Step k consumes draw k of the counter
/// generator keyed by `seed`.
std::vector<MeasurementRecord> simulate_sequence(const Projector &initial,
                                                 std::span<const Context> contexts,
                                                 std::uint64_t seed, const Tolerance &tol = {});

} // namespace csm
