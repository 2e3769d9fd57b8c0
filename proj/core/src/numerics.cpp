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

#include "csm/numerics.hpp"

#include <cmath>
#include <string>

#include "csm/error.hpp"

namespace csm {

Tolerance::Tolerance(double abs_eps, double rel_eps) : abs_eps_(abs_eps), rel_eps_(rel_eps) {
    auto valid = [](double x) { return std::isfinite(x) && x >= 0.0 && x < kSanityBound; };
    if (!valid(abs_eps) || !valid(rel_eps)) {
        throw Error(ErrorKind::InvalidArgument,
                    "tolerance must lie in [0, 1e-3), got abs=" + std::to_string(abs_eps) +
                        " rel=" + std::to_string(rel_eps));
    }
}

double max_abs(const ComplexMatrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool all_finite(const ComplexMatrix &m) {
    return m.allFinite();
}

void require_finite(const ComplexMatrix &m, const char *what) {
    if (!m.allFinite()) {
        throw Error(ErrorKind::InvalidArgument, std::string(what) + " has non-finite entries");
    }
}

double hermitian_deviation(const ComplexMatrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "matrix is " + std::to_string(m.rows()) + "x" +
                                                      std::to_string(m.cols()) + ", not square");
    }
    return max_abs(m - m.adjoint());
}

ComplexMatrix outer(const ComplexVector &v) {
    return v * v.adjoint();
}

std::vector<ComplexVector> gram_schmidt(std::span<const ComplexVector> vectors,
                                        const Tolerance &tol) {
    if (vectors.empty()) {
        throw Error(ErrorKind::InvalidArgument, "gram_schmidt needs at least one vector");
    }
    const auto dim = vectors.front().size();
    std::vector<ComplexVector> basis;
    basis.reserve(vectors.size());
    for (std::size_t k = 0; k < vectors.size(); ++k) {
        const ComplexVector &v = vectors[k];
        if (v.size() != dim) {
            throw Error(ErrorKind::DimensionMismatch,
                        "vector " + std::to_string(k) + " has length " + std::to_string(v.size()) +
                            ", expected " + std::to_string(dim));
        }
        require_finite(v, "gram_schmidt input");
        ComplexVector w = v;
        // Second sweep removes the loss of orthogonality left by the first.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &q : basis) {
                w -= q.dot(w) * q;
            }
        }
        const double norm = w.norm();
        if (tol.accepts(norm, v.norm())) {
            throw Error(ErrorKind::DependentInput,
                        "vector " + std::to_string(k) +
                            " lies in the span of the preceding vectors (residual norm " +
                            std::to_string(norm) + ")");
        }
        basis.push_back(w / norm);
    }
    return basis;
}

HermitianEigen eig_hermitian(const ComplexMatrix &m, const Tolerance &tol) {
    require_finite(m, "eig_hermitian input");
    const double dev = hermitian_deviation(m);
    if (!tol.accepts(dev, max_abs(m))) {
        throw Error(ErrorKind::NotHermitian,
                    "‖M − M†‖_max = " + std::to_string(dev) + " exceeds tolerance");
    }
    // Symmetrize so the solver sees an exactly self-adjoint input.
    const ComplexMatrix h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorKind::InvalidArgument, "Hermitian eigen-solver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

UnitarityReport is_unitary(const ComplexMatrix &m, const Tolerance &tol) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "is_unitary needs a square matrix");
    }
    const auto n = m.rows();
    const double dev = max_abs(m.adjoint() * m - ComplexMatrix::Identity(n, n));
    return {dev <= tol.abs_eps(), dev};
}

} // namespace csm
