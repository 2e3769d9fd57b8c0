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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "csm/model.hpp"

namespace csm::uhlhorn {

struct RayPair {
    Projector source;
    Projector target;
};

/// A bijective correspondence Γ between finitely many rays, together with the
/// contexts it is known to cover.
class RayMap {
  public:
    /// Throws DimensionTooSmall for N < 3; InvalidRayMap when sources or
    /// targets repeat (as projectors, within tol), when dimensions disagree, or
    /// when a covering context has a projector missing from the sources.
    static RayMap make(std::vector<RayPair> pairs, std::vector<Context> covering_contexts,
                       const Tolerance &tol = {});

    int dim() const noexcept { return dim_; }
    const std::vector<RayPair> &pairs() const noexcept { return pairs_; }
    const std::vector<Context> &covering_contexts() const noexcept { return covering_; }

    /// Index of the pair whose source equals `p` (within tol), if any.
    std::optional<std::size_t> find_source(const Projector &p, const Tolerance &tol = {}) const;

  private:
    RayMap(int dim, std::vector<RayPair> pairs, std::vector<Context> covering)
        : dim_(dim), pairs_(std::move(pairs)), covering_(std::move(covering)) {}

    int dim_;
    std::vector<RayPair> pairs_;
    std::vector<Context> covering_;
};

struct OrthogonalityViolation {
    std::size_t first = 0;
    std::size_t second = 0;
    double source_norm = 0.0; // ‖PᵢPⱼ‖_max
    double target_norm = 0.0; // ‖Γ(Pᵢ)Γ(Pⱼ)‖_max
};

struct OrthogonalityCheck {
    bool preserving = true;
    std::optional<OrthogonalityViolation> counterexample;

    explicit operator bool() const noexcept { return preserving; }
};

/// PᵢPⱼ = 0 ⇔ Γ(Pᵢ)Γ(Pⱼ) = 0 for every listed pair of rays.
OrthogonalityCheck check_orthogonality_preserving(const RayMap &m, const Tolerance &tol = {});

/// Tr(P₁P₂P₃) = ⟨ψ₁|ψ₂⟩⟨ψ₂|ψ₃⟩⟨ψ₃|ψ₁⟩.
Complex bargmann_invariant(const Projector &p1, const Projector &p2, const Projector &p3);

enum class Branch { Unitary, Antiunitary, Neither, Inconclusive };

std::string_view to_string(Branch b);

struct WitnessTriple {
    std::array<std::size_t, 3> indices{};
    Complex source_invariant;
    Complex target_invariant;
};

struct TransformClassification {
    Branch verdict = Branch::Inconclusive;
    /// For Unitary/Antiunitary: the triple with the largest |Im| invariant.
    /// For Neither: the first triple matching neither branch.
    std::optional<WitnessTriple> witness;
};

/// Decides the branch from triples whose source invariant has |Im| > tol:
/// unitary maps preserve Tr(P₁P₂P₃), anti-unitary maps conjugate it.
/// Throws HypothesisViolated when the map does not preserve orthogonality.
TransformClassification classify_transform(const RayMap &m, const Tolerance &tol = {});

struct FitReport {
    ContextTransform transform;
    Branch verdict = Branch::Unitary;
    bool branch_ambiguous = false; // classification was Inconclusive
    double residual = 0.0;         // max over pairs of ‖Γ(P) − U act(P) U†‖_max
    std::string fiduciary_label;
};

/// Maximum fit residual accepted by fit_transform.
inline constexpr double kFitResidualBound = 1e-8;

/// Rebuilds the operator inducing Γ from the phase-fixing gadget of the first
/// covering context whose gadget rays are all listed. The result is normalized
/// so the first non-negligible entry of its first column is real positive.
/// Throws MissingGadget, HypothesisViolated (verdict Neither or orthogonality
/// broken) or FitFailed (residual above kFitResidualBound).
FitReport fit_transform(const RayMap &m, const Tolerance &tol = {});

/// ‖A − e^{iφ} B‖_max at the phase φ = arg Tr(B†A) that best aligns B with A.
double distance_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b);

} // namespace csm::uhlhorn
