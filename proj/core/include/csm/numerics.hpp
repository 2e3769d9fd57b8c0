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

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace csm {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

/// Approximate-equality policy shared by every operation. A deviation `d`
/// measured against a quantity of magnitude `scale` is accepted when
/// d <= abs_eps + rel_eps * scale. Both knobs must lie in [0, 1e-3).
class Tolerance {
  public:
    static constexpr double kDefault = 1e-9;
    static constexpr double kSanityBound = 1e-3;

    Tolerance() = default;
    explicit Tolerance(double abs_eps, double rel_eps = kDefault);

    double abs_eps() const noexcept { return abs_eps_; }
    double rel_eps() const noexcept { return rel_eps_; }

    bool accepts(double deviation, double scale = 0.0) const noexcept {
        return deviation <= abs_eps_ + rel_eps_ * scale;
    }

  private:
    double abs_eps_ = kDefault;
    double rel_eps_ = kDefault;
};

/// Largest entry modulus, ‖M‖_max.
double max_abs(const ComplexMatrix &m);

bool all_finite(const ComplexMatrix &m);

/// Throws InvalidArgument when any entry is NaN or infinite.
void require_finite(const ComplexMatrix &m, const char *what);

/// ‖M − M†‖_max; throws DimensionMismatch for non-square input.
double hermitian_deviation(const ComplexMatrix &m);

/// |v⟩⟨v|
ComplexMatrix outer(const ComplexVector &v);

/// Two-pass modified Gram-Schmidt. Output spans the same space as the input,
/// in the same order.
/// Throws DependentInput when a vector has no component (within tol) outside
/// the span of its predecessors, DimensionMismatch on ragged input.
std::vector<ComplexVector> gram_schmidt(std::span<const ComplexVector> vectors,
                                        const Tolerance &tol = {});

struct HermitianEigen {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // columns, unitary
};

/// Eigen-decomposition of a self-adjoint matrix: M = V diag(λ) V†.
/// Throws NotHermitian if ‖M − M†‖_max exceeds tol (relative to ‖M‖_max).
HermitianEigen eig_hermitian(const ComplexMatrix &m, const Tolerance &tol = {});

struct UnitarityReport {
    bool unitary = false;
    double deviation = 0.0; // ‖M†M − I‖_max

    explicit operator bool() const noexcept { return unitary; }
};

UnitarityReport is_unitary(const ComplexMatrix &m, const Tolerance &tol = {});

} // namespace csm
