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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csm/model.hpp"

namespace csm::gleason {

/// One observed value f(P) of a candidate frame function.
struct FrameSample {
    Projector projector;
    double value = 0.0;
};

/// Values of f on every projector of one context, in context order.
struct ContextValues {
    Context context;
    std::vector<double> values;
};

struct FrameValidation {
    double max_deviation = 0.0; // max over contexts of |Σᵢ fᵢ − 1|
    std::string worst_context;  // label of the context attaining it
    bool passed = true;
};

/// Checks the normalization Σᵢ f(Pᵢ) = 1 on every listed context.
/// Throws DimensionMismatch when a value list does not match its context and
/// ValueOutOfRange for values outside [0, 1] by more than tol.
FrameValidation validate_frame_function(std::span<const ContextValues> samples,
                                        const Tolerance &tol = {});

/// Orthonormal basis of the N²-dimensional real space of N×N Hermitian
/// matrices under ⟨A, B⟩ = Tr(AB): I/√N first, then the generalized Gell-Mann
/// matrices (symmetric and antisymmetric off-diagonal pairs, then diagonal).
std::vector<ComplexMatrix> hermitian_basis(int dim);

/// Coordinates of a Hermitian matrix in `hermitian_basis`.
RealVector hermitian_coordinates(const ComplexMatrix &h);

/// Rows are Tr(B_a P_k) for each projector P_k.
RealMatrix design_matrix(std::span<const Projector> projectors);

struct CompletenessReport {
    int rank = 0;
    double condition_number = 0.0; // σ_max / σ_min over the nonzero singular values
};

CompletenessReport informational_completeness(std::span<const Projector> projectors);

struct ReconstructionReport {
    DensityOperator rho;
    double residual_rms = 0.0;
    int design_rank = 0;
    double condition_number = 0.0;
    double psd_correction = 0.0; // ‖ρ_psd − ρ_ls‖_F
};

/// Least-squares fit of Tr(ρPₖ) ≈ fₖ over unit-trace Hermitian ρ, followed by
/// one projection onto the PSD cone (eigenvalue clipping, trace renormalized).
/// Throws DimensionTooSmall for N < 3 and NotInformationallyComplete when the
/// projectors do not span all N² directions.
ReconstructionReport reconstruct_density(std::span<const FrameSample> samples,
                                         const Tolerance &tol = {});

/// Returns ρ's dominant eigenprojector if ρ is (within tol) pure.
std::optional<Projector> born_case_check(const DensityOperator &rho, const Tolerance &tol = {});

} // namespace csm::gleason
