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

#include "csm/simulate.hpp"

#include "csm/error.hpp"
#include "csm/rng.hpp"

namespace csm {

int sample_outcome(const RealVector &probabilities, double u, const Tolerance &tol) {
    double mass = 0.0;
    int last_eligible = -1;
    for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
        if (probabilities(i) > tol.abs_eps()) {
            mass += probabilities(i);
            last_eligible = static_cast<int>(i);
        }
    }
    if (last_eligible < 0) {
        throw Error(ErrorKind::ValueOutOfRange, "distribution has no outcome with positive probability");
    }
    const double target = u * mass;
    double cumulative = 0.0;
    for (Eigen::Index i = 0; i < probabilities.size(); ++i) {
        if (probabilities(i) <= tol.abs_eps()) {
            continue;
        }
        cumulative += probabilities(i);
        if (target < cumulative) {
            return static_cast<int>(i);
        }
    }
    return last_eligible;
}

std::vector<MeasurementRecord> simulate_sequence(const Projector &initial,
                                                 std::span<const Context> contexts,
                                                 std::uint64_t seed, const Tolerance &tol) {
    const CounterRng rng(seed);
    std::vector<MeasurementRecord> log;
    log.reserve(contexts.size());
    Projector state = initial;
    for (std::size_t step = 0; step < contexts.size(); ++step) {
        const Context &c = contexts[step];
        if (c.dim() != state.dim()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "context '" + c.label() + "' has dimension " + std::to_string(c.dim()) +
                            ", state has " + std::to_string(state.dim()));
        }
        const auto probs = context_distribution(DensityOperator::from_projector(state), c, tol);
        const int outcome = sample_outcome(probs, rng.uniform(step), tol);
        state = c.projector(static_cast<std::size_t>(outcome));
        log.push_back({c.label(), outcome, state});
    }
    return log;
}

} // namespace csm
