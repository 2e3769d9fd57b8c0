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

#include <utility>
#include <vector>

#include "csm/numerics.hpp"

namespace csm::topology {

/// Bijection i ↦ σ(i) on {0, …, n−1}.
class Permutation {
  public:
    /// Throws InvalidArgument unless `images` is a permutation of 0..n−1.
    static Permutation make(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int a, int b);

    int n() const noexcept { return static_cast<int>(images_.size()); }
    const std::vector<int> &images() const noexcept { return images_; }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i)); }

    /// +1 for even, −1 for odd, from the cycle decomposition.
    int sign() const;

  private:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {}

    std::vector<int> images_;
};

/// All n! permutations in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n);

/// Entry (σ(i), i) = 1, zero elsewhere.
ComplexMatrix permutation_matrix(const Permutation &sigma);

struct PathReport {
    int steps = 0;
    std::vector<ComplexMatrix> samples; // U(t_k), t_k = k / (steps − 1)
    ComplexMatrix generator;            // self-adjoint H with U(t) = exp(itH)
    double max_unitarity_deviation = 0.0;
    std::pair<double, double> endpoint_errors{0.0, 0.0}; // ‖U(0) − I‖_max, ‖U(1) − P_σ‖_max
    double max_step_distance = 0.0;
};

/// Continuous path U(t) = exp(itH) from I to P_σ inside U(n). H is read off
/// the spectral decomposition of P_σ with eigenphases in (−π, π] (−1 ↦ +π).
/// Throws InvalidArgument for steps < 2.
PathReport unitary_path_to_identity(const Permutation &sigma, int steps);

struct OrthogonalObstruction {
    int det_sign = 1;
    bool connected_in_orthogonal_group = true;
};

/// det is continuous on O(n) and takes only the values ±1, so P_σ lies in the
/// identity component iff σ is even.
OrthogonalObstruction orthogonal_obstruction(const Permutation &sigma);

} // namespace csm::topology
