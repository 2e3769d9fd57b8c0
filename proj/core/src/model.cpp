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

#include "csm/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "csm/error.hpp"

namespace csm {
namespace {

void require_same_dim(int a, int b, const char *what) {
    if (a != b) {
        throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": dimension " +
                                                      std::to_string(a) + " vs " +
                                                      std::to_string(b));
    }
}

std::string format_complex(Complex z) {
    std::ostringstream os;
    os.precision(6);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

} // namespace

Projector Projector::from_ray(const ComplexVector &v) {
    require_finite(v, "projector representative");
    const double norm = v.norm();
    if (v.size() == 0 || norm == 0.0) {
        throw Error(ErrorKind::InvalidArgument, "projector needs a nonzero vector");
    }
    return Projector(v / norm);
}

Projector::Projector(ComplexVector unit)
    : representative_(std::move(unit)), matrix_(outer(representative_)) {}

ComplexMatrix Context::basis_matrix() const {
    ComplexMatrix b(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        b.col(i) = projectors_[i].representative();
    }
    return b;
}

Context make_context(std::span<const ComplexVector> vectors, std::string label,
                     const Tolerance &tol) {
    const int n = static_cast<int>(vectors.size());
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "context needs at least one vector");
    }
    for (int i = 0; i < n; ++i) {
        require_same_dim(static_cast<int>(vectors[i].size()), n, "context vector count vs length");
        require_finite(vectors[i], "context vector");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            const Complex ip = vectors[i].dot(vectors[j]);
            const Complex expected = i == j ? 1.0 : 0.0;
            if (std::abs(ip - expected) > tol.abs_eps()) {
                throw Error(ErrorKind::NotOrthonormal,
                            "vectors (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") have inner product " + format_complex(ip));
            }
        }
    }
    std::vector<Projector> projectors;
    projectors.reserve(n);
    for (const auto &v : vectors) {
        projectors.push_back(Projector::from_ray(v));
    }
    return Context(n, std::move(projectors), std::move(label));
}

ContextDefects context_defects(const Context &c) {
    ContextDefects d;
    const int n = c.dim();
    ComplexMatrix sum = ComplexMatrix::Zero(n, n);
    for (std::size_t i = 0; i < c.size(); ++i) {
        sum += c.projector(i).matrix();
        for (std::size_t j = 0; j < c.size(); ++j) {
            if (i != j) {
                d.exclusivity = std::max(
                    d.exclusivity, max_abs(c.projector(i).matrix() * c.projector(j).matrix()));
            }
        }
    }
    d.completeness = max_abs(sum - ComplexMatrix::Identity(n, n));
    return d;
}

Modality modality(const Context &c, int index) {
    if (index < 0 || index >= static_cast<int>(c.size())) {
        throw Error(ErrorKind::InvalidArgument, "modality index " + std::to_string(index) +
                                                    " outside context of size " +
                                                    std::to_string(c.size()));
    }
    return Modality{c.label(), index, c.projector(index)};
}

std::vector<Modality> modalities(const Context &c) {
    std::vector<Modality> out;
    out.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out.push_back(modality(c, static_cast<int>(i)));
    }
    return out;
}

DensityOperator DensityOperator::from_matrix(const ComplexMatrix &m, const Tolerance &tol) {
    if (m.rows() == 0) {
        throw Error(ErrorKind::InvalidArgument, "density operator must be nonempty");
    }
    const auto eig = eig_hermitian(m, tol);
    const double trace = m.trace().real();
    if (std::abs(trace - 1.0) > tol.abs_eps()) {
        throw Error(ErrorKind::ValueOutOfRange,
                    "density operator trace " + std::to_string(trace) + " differs from 1");
    }
    if (eig.eigenvalues(0) < -tol.abs_eps()) {
        throw Error(ErrorKind::ValueOutOfRange,
                    "density operator has negative eigenvalue " + std::to_string(eig.eigenvalues(0)));
    }
    ComplexMatrix h = 0.5 * (m + m.adjoint());
    h /= h.trace().real();
    return DensityOperator(std::move(h));
}

DensityOperator DensityOperator::from_projector(const Projector &p) {
    return DensityOperator(p.matrix());
}

DensityOperator DensityOperator::maximally_mixed(int dim) {
    if (dim <= 0) {
        throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    }
    return DensityOperator(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

ContextTransform ContextTransform::make(ComplexMatrix u, bool antiunitary, const Tolerance &tol) {
    require_finite(u, "transform matrix");
    const auto report = is_unitary(u, tol);
    if (!report) {
        throw Error(ErrorKind::InvalidArgument,
                    "transform matrix is not unitary (deviation " + std::to_string(report.deviation) +
                        ")");
    }
    return ContextTransform(std::move(u), antiunitary);
}

ContextTransform ContextTransform::identity(int dim) {
    return ContextTransform(ComplexMatrix::Identity(dim, dim), false);
}

ComplexVector ContextTransform::act(const ComplexVector &v) const {
    require_same_dim(static_cast<int>(v.size()), dim(), "transform on vector");
    return antiunitary_ ? ComplexVector(matrix_ * v.conjugate()) : ComplexVector(matrix_ * v);
}

ComplexMatrix ContextTransform::act(const ComplexMatrix &p) const {
    require_same_dim(static_cast<int>(p.rows()), dim(), "transform on matrix");
    if (antiunitary_) {
        return matrix_ * p.conjugate() * matrix_.adjoint();
    }
    return matrix_ * p * matrix_.adjoint();
}

Projector ContextTransform::act(const Projector &p) const {
    return Projector::from_ray(act(p.representative()));
}

double born_probability(const DensityOperator &rho, const Projector &p, const Tolerance &tol) {
    require_same_dim(rho.dim(), p.dim(), "born_probability");
    const auto &psi = p.representative();
    const double raw = psi.dot(rho.matrix() * psi).real();
    if (raw < -tol.abs_eps() || raw > 1.0 + tol.abs_eps()) {
        throw Error(ErrorKind::ValueOutOfRange,
                    "Tr(ρP) = " + std::to_string(raw) + " lies outside [0, 1]");
    }
    return std::clamp(raw, 0.0, 1.0);
}

RealVector context_distribution(const DensityOperator &rho, const Context &c,
                                const Tolerance &tol) {
    require_same_dim(rho.dim(), c.dim(), "context_distribution");
    RealVector probs(static_cast<Eigen::Index>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i) {
        probs(static_cast<Eigen::Index>(i)) = born_probability(rho, c.projector(i), tol);
    }
    return probs;
}

bool are_exclusive(const Modality &a, const Modality &b, const Tolerance &tol) {
    require_same_dim(a.projector.dim(), b.projector.dim(), "are_exclusive");
    return max_abs(a.projector.matrix() * b.projector.matrix()) <= tol.abs_eps();
}

bool extravalent(const Modality &a, const Modality &b, const Tolerance &tol) {
    require_same_dim(a.projector.dim(), b.projector.dim(), "extravalent");
    return max_abs(a.projector.matrix() - b.projector.matrix()) <= tol.abs_eps();
}

std::vector<std::vector<std::size_t>> extravalence_classes(std::span<const Modality> modalities,
                                                           const Tolerance &tol) {
    const std::size_t n = modalities.size();
    for (std::size_t i = 1; i < n; ++i) {
        require_same_dim(modalities[0].projector.dim(), modalities[i].projector.dim(),
                         "extravalence_classes");
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (extravalent(modalities[i], modalities[j], tol)) {
                const auto ri = find(i);
                const auto rj = find(j);
                parent[std::max(ri, rj)] = std::min(ri, rj);
            }
        }
    }
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::ptrdiff_t> slot(n, -1);
    for (std::size_t i = 0; i < n; ++i) {
        const auto root = find(i);
        if (slot[root] < 0) {
            slot[root] = static_cast<std::ptrdiff_t>(classes.size());
            classes.emplace_back();
        }
        classes[static_cast<std::size_t>(slot[root])].push_back(i);
    }
    return classes;
}

Context apply_transform(const Context &c, const ContextTransform &g, const Tolerance &tol) {
    require_same_dim(c.dim(), g.dim(), "apply_transform");
    std::vector<ComplexVector> images;
    images.reserve(c.size());
    for (const auto &p : c.projectors()) {
        images.push_back(g.act(p.representative()));
    }
    return make_context(images, c.label(), tol);
}

} // namespace csm
