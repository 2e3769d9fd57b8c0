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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "csm/numerics.hpp"

namespace csm::partition {

/// Raw, unvalidated contents of a KS instance file.
struct KsDocument {
    int dim = 0;
    std::vector<ComplexVector> vectors;
    std::vector<std::vector<long long>> bases;
};

/// Vectors (normalized) with designated orthogonal bases, each basis a list of
/// `dim` distinct vector indices. Every vector belongs to at least one basis.
class KsInstance {
  public:
    int dim() const noexcept { return dim_; }
    std::size_t vector_count() const noexcept { return vectors_.size(); }
    std::size_t basis_count() const noexcept { return bases_.size(); }
    const std::vector<ComplexVector> &vectors() const noexcept { return vectors_; }
    const std::vector<std::vector<std::size_t>> &bases() const noexcept { return bases_; }

    /// Number of bases containing each vector.
    std::vector<int> multiplicities() const;

  private:
    friend KsInstance load_ks_instance(const KsDocument &, const Tolerance &);

    int dim_ = 0;
    std::vector<ComplexVector> vectors_;
    std::vector<std::vector<std::size_t>> bases_;
};

/// Validates shape and re-checks orthogonality of every basis numerically.
/// Throws MalformedDocument or BasisNotOrthogonal.
KsInstance load_ks_instance(const KsDocument &doc, const Tolerance &tol = {});

/// The instance with basis `index` removed and any vector left uncovered
/// dropped (remaining vectors keep their relative order).
KsInstance without_basis(const KsInstance &inst, std::size_t index, const Tolerance &tol = {});

/// Every vector lies in an even number of bases while the number of bases is
/// odd: summing ones per basis gives B, summing per vector gives an even number.
struct ParityCertificate {
    std::size_t basis_count = 0;
    std::vector<int> multiplicities;
};

std::optional<ParityCertificate> parity_certificate(const KsInstance &inst);

enum class SatStatus { Sat, Unsat };

struct AssignmentResult {
    SatStatus status = SatStatus::Unsat;
    std::optional<std::vector<std::uint8_t>> assignment; // one {0,1} per vector, iff Sat
    std::uint64_t nodes_explored = 0;                    // decisions tried
    std::optional<ParityCertificate> certificate;
};

/// Complete backtracking search for a noncontextual valuation: one value per
/// vector, exactly one 1 in every basis. Variables are branched in a fixed
/// order (most bases first, then index), value 1 before 0, with unit
/// propagation after every assignment.
AssignmentResult search_assignment(const KsInstance &inst);

/// Number of valid valuations, stopping early once `limit` is reached.
std::uint64_t count_assignments(const KsInstance &inst, std::uint64_t limit = UINT64_MAX);

/// Independent check of the exactly-one-per-basis constraint.
bool satisfies(const KsInstance &inst, std::span<const std::uint8_t> assignment);

} // namespace csm::partition
