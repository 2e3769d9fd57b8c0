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

#include "csm/random.hpp"

#include <cmath>

namespace csm::random {
namespace {

ComplexMatrix ginibre(int rows, int cols, RngStream &rng) {
    ComplexMatrix g(rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            const double re = rng.next_normal();
            const double im = rng.next_normal();
            g(i, j) = Complex(re, im) / std::sqrt(2.0);
        }
    }
    return g;
}

} // namespace

ComplexVector unit_vector(int dim, RngStream &rng) {
    ComplexVector v = ginibre(dim, 1, rng).col(0);
    return v / v.norm();
}

ComplexMatrix unitary(int dim, RngStream &rng) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        const Complex d = r(i, i);
        const double mag = std::abs(d);
        if (mag > 0.0) {
            q.col(i) *= d / mag;
        }
    }
    return q;
}

ComplexMatrix hermitian(int dim, RngStream &rng) {
    const ComplexMatrix a = ginibre(dim, dim, rng);
    return a + a.adjoint();
}

DensityOperator density(int dim, RngStream &rng) {
    const ComplexMatrix g = ginibre(dim, dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return DensityOperator::from_matrix(rho);
}

Context context(int dim, RngStream &rng, std::string label) {
    const ComplexMatrix u = unitary(dim, rng);
    std::vector<ComplexVector> columns;
    columns.reserve(dim);
    for (int i = 0; i < dim; ++i) {
        columns.emplace_back(u.col(i));
    }
    return make_context(columns, std::move(label));
}

} // namespace csm::random
