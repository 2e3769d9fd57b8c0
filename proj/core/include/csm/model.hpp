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
#include <span>
#include <string>
#include <vector>

#include "csm/numerics.hpp"

namespace csm {

/// Rank-one orthogonal projection |ψ⟩⟨ψ| onto a ray. The representative is
/// normalized at construction; its global phase carries no meaning.
class Projector {
  public:
    /// Normalizes `v`. Throws InvalidArgument for a zero or non-finite vector.
    static Projector from_ray(const ComplexVector &v);

    int dim() const noexcept { return static_cast<int>(representative_.size()); }
    const ComplexVector &representative() const noexcept { return representative_; }
    const ComplexMatrix &matrix() const noexcept { return matrix_; }

  private:
    explicit Projector(ComplexVector unit);

    ComplexVector representative_;
    ComplexMatrix matrix_;
};

/// Ordered complete set of N mutually orthogonal rank-one projectors.
class Context {
  public:
    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return projectors_.size(); }
    const std::string &label() const noexcept { return label_; }
    const Projector &projector(std::size_t i) const { return projectors_.at(i); }
    const std::vector<Projector> &projectors() const noexcept { return projectors_; }

    /// Columns are the representatives, in order.
    ComplexMatrix basis_matrix() const;

  private:
    friend Context make_context(std::span<const ComplexVector>, std::string, const Tolerance &);

    Context(int dim, std::vector<Projector> projectors, std::string label)
        : dim_(dim), projectors_(std::move(projectors)), label_(std::move(label)) {}

    int dim_;
    std::vector<Projector> projectors_;
    std::string label_;
};

/// Builds a context from an orthonormal basis. Throws NotOrthonormal naming the
/// first offending pair (i, j) and its inner product; DimensionMismatch when the
/// number of vectors differs from their length.
Context make_context(std::span<const ComplexVector> vectors, std::string label,
                     const Tolerance &tol = {});

/// Largest deviations from the context invariants: max_{i≠j} ‖P_iP_j‖_max and
/// ‖ΣP_i − I‖_max.
struct ContextDefects {
    double exclusivity = 0.0;
    double completeness = 0.0;
};
ContextDefects context_defects(const Context &c);

/// A measurement result within a context.
struct Modality {
    std::string context_label;
    int index = 0;
    Projector projector;
};

Modality modality(const Context &c, int index);
std::vector<Modality> modalities(const Context &c);

/// Positive-semidefinite, self-adjoint, unit-trace operator.
class DensityOperator {
  public:
    /// Validates within tol, then stores the symmetrized, trace-normalized
    /// matrix. Throws NotHermitian, ValueOutOfRange (negative eigenvalue or
    /// trace ≠ 1) or DimensionMismatch.
    static DensityOperator from_matrix(const ComplexMatrix &m, const Tolerance &tol = {});
    static DensityOperator from_projector(const Projector &p);
    static DensityOperator maximally_mixed(int dim);

    int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
    const ComplexMatrix &matrix() const noexcept { return matrix_; }

  private:
    explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}

    ComplexMatrix matrix_;
};

/// Unitary or anti-unitary map ψ ↦ U ψ (resp. U ψ*), conjugation taken in the
/// standard basis.
class ContextTransform {
  public:
    /// Throws InvalidArgument if `u` is not unitary within tol.
    static ContextTransform make(ComplexMatrix u, bool antiunitary, const Tolerance &tol = {});
    static ContextTransform identity(int dim);

    int dim() const noexcept { return static_cast<int>(matrix_.rows()); }
    const ComplexMatrix &matrix() const noexcept { return matrix_; }
    bool antiunitary() const noexcept { return antiunitary_; }

    ComplexVector act(const ComplexVector &v) const;
    /// U P U†, or U P* U† for the anti-unitary branch.
    ComplexMatrix act(const ComplexMatrix &p) const;
    Projector act(const Projector &p) const;

  private:
    ContextTransform(ComplexMatrix u, bool antiunitary)
        : matrix_(std::move(u)), antiunitary_(antiunitary) {}

    ComplexMatrix matrix_;
    bool antiunitary_ = false;
};

/// Tr(ρP). Values within tol outside [0, 1] are clamped; anything further out
/// raises ValueOutOfRange.
double born_probability(const DensityOperator &rho, const Projector &p, const Tolerance &tol = {});

/// Born probabilities of every modality of `c`, in context order.
RealVector context_distribution(const DensityOperator &rho, const Context &c,
                                const Tolerance &tol = {});

/// ‖P₁P₂‖_max ≤ tol.
bool are_exclusive(const Modality &a, const Modality &b, const Tolerance &tol = {});

/// ‖P₁ − P₂‖_max ≤ tol: the two modalities share a projector.
bool extravalent(const Modality &a, const Modality &b, const Tolerance &tol = {});

/// Groups input indices by transitive closure of `extravalent`. Classes are
/// ordered by their smallest member; members ascend.
std::vector<std::vector<std::size_t>> extravalence_classes(std::span<const Modality> modalities,
                                                           const Tolerance &tol = {});

/// Image of every projector of `c` under `g`; keeps the label.
Context apply_transform(const Context &c, const ContextTransform &g, const Tolerance &tol = {});

} // namespace csm
