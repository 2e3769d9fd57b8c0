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

#include "csm/gleason.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "csm/error.hpp"

namespace csm::gleason {
namespace {

// Relative singular-value cutoff for the numerical rank of a design matrix.
constexpr double kRankCutoff = 1e-10;

// Tolerated excursion of a frame value outside the unit interval.
constexpr double kValueSlack = 1e-12;

int require_common_dim(std::span<const Projector> projectors) {
    if (projectors.empty()) {
        throw Error(ErrorKind::InvalidArgument, "need at least one projector");
    }
    const int n = projectors.front().dim();
    for (const auto &p : projectors) {
        if (p.dim() != n) {
            throw Error(ErrorKind::DimensionMismatch, "projectors of dimension " + std::to_string(n) +
                                                          " and " + std::to_string(p.dim()));
        }
    }
    return n;
}

} // namespace

FrameValidation validate_frame_function(std::span<const ContextValues> samples,
                                        const Tolerance &tol) {
    FrameValidation report;
    for (const auto &entry : samples) {
        if (entry.values.size() != entry.context.size()) {
            throw Error(ErrorKind::DimensionMismatch,
                        "context '" + entry.context.label() + "' has " +
                            std::to_string(entry.context.size()) + " projectors but " +
                            std::to_string(entry.values.size()) + " values");
        }
        double sum = 0.0;
        for (double v : entry.values) {
            if (!std::isfinite(v) || v < -tol.abs_eps() || v > 1.0 + tol.abs_eps()) {
                throw Error(ErrorKind::ValueOutOfRange, "value " + std::to_string(v) + " in context '" +
                                                            entry.context.label() +
                                                            "' is outside [0, 1]");
            }
            sum += v;
        }
        const double dev = std::abs(sum - 1.0);
        if (report.worst_context.empty() || dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_context = entry.context.label();
        }
    }
    report.passed = report.max_deviation <= tol.abs_eps();
    return report;
}

std::vector<ComplexMatrix> hermitian_basis(int dim) {
    if (dim <= 0) {
        throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    }
    const double r2 = 1.0 / std::sqrt(2.0);
    const Complex i(0.0, 1.0);
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(dim) * dim);
    basis.push_back(ComplexMatrix::Identity(dim, dim) / std::sqrt(static_cast<double>(dim)));
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            ComplexMatrix s = ComplexMatrix::Zero(dim, dim);
            s(j, k) = r2;
            s(k, j) = r2;
            basis.push_back(std::move(s));
            ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
            a(j, k) = -i * r2;
            a(k, j) = i * r2;
            basis.push_back(std::move(a));
        }
    }
    for (int l = 1; l < dim; ++l) {
        ComplexMatrix d = ComplexMatrix::Zero(dim, dim);
        const double scale = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int m = 0; m < l; ++m) {
            d(m, m) = scale;
        }
        d(l, l) = -l * scale;
        basis.push_back(std::move(d));
    }
    return basis;
}

RealVector hermitian_coordinates(const ComplexMatrix &h) {
    const auto basis = hermitian_basis(static_cast<int>(h.rows()));
    RealVector x(static_cast<Eigen::Index>(basis.size()));
    for (std::size_t a = 0; a < basis.size(); ++a) {
        x(static_cast<Eigen::Index>(a)) = (basis[a] * h).trace().real();
    }
    return x;
}

RealMatrix design_matrix(std::span<const Projector> projectors) {
    const int n = require_common_dim(projectors);
    const auto basis = hermitian_basis(n);
    RealMatrix a(static_cast<Eigen::Index>(projectors.size()),
                 static_cast<Eigen::Index>(basis.size()));
    for (std::size_t k = 0; k < projectors.size(); ++k) {
        const auto &psi = projectors[k].representative();
        for (std::size_t b = 0; b < basis.size(); ++b) {
            a(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(b)) =
                psi.dot(basis[b] * psi).real();
        }
    }
    return a;
}

CompletenessReport informational_completeness(std::span<const Projector> projectors) {
    const RealMatrix a = design_matrix(projectors);
    Eigen::JacobiSVD<RealMatrix> svd(a);
    const RealVector &sv = svd.singularValues();
    CompletenessReport report;
    if (sv.size() == 0 || sv(0) == 0.0) {
        return report;
    }
    const double cutoff = kRankCutoff * sv(0);
    double smallest = sv(0);
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > cutoff) {
            ++report.rank;
            smallest = sv(i);
        }
    }
    report.condition_number = sv(0) / smallest;
    return report;
}

ReconstructionReport reconstruct_density(std::span<const FrameSample> samples,
                                         const Tolerance &tol) {
    if (samples.empty()) {
        throw Error(ErrorKind::InvalidArgument, "no frame samples");
    }
    std::vector<Projector> projectors;
    projectors.reserve(samples.size());
    RealVector values(static_cast<Eigen::Index>(samples.size()));
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const double v = samples[k].value;
        if (!std::isfinite(v) || v < -kValueSlack || v > 1.0 + kValueSlack) {
            throw Error(ErrorKind::ValueOutOfRange,
                        "sample " + std::to_string(k) + " has value " + std::to_string(v));
        }
        projectors.push_back(samples[k].projector);
        values(static_cast<Eigen::Index>(k)) = v;
    }
    const int n = require_common_dim(projectors);
    if (n < 3) {
        throw Error(ErrorKind::DimensionTooSmall,
                    "dimension " + std::to_string(n) + " is below 3; frame functions there need not "
                                                       "be of trace form");
    }
    const auto completeness = informational_completeness(projectors);
    const int params = n * n;
    if (completeness.rank < params) {
        throw Error(ErrorKind::NotInformationallyComplete,
                    "design rank " + std::to_string(completeness.rank) + " < " + std::to_string(params));
    }

    // Tr ρ = 1 pins the identity coordinate at 1/√N; solve for the traceless part.
    const RealMatrix a = design_matrix(projectors);
    const double x0 = 1.0 / std::sqrt(static_cast<double>(n));
    const RealVector rhs = values - a.col(0) * x0;
    const RealMatrix reduced = a.rightCols(params - 1);
    Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod(reduced);
    const RealVector tail = cod.solve(rhs);

    const auto basis = hermitian_basis(n);
    ComplexMatrix rho_ls = x0 * basis[0];
    for (int b = 1; b < params; ++b) {
        rho_ls += tail(b - 1) * basis[static_cast<std::size_t>(b)];
    }

    const auto eig = eig_hermitian(rho_ls, tol);
    RealVector clipped = eig.eigenvalues.cwiseMax(0.0);
    clipped /= clipped.sum();
    const ComplexMatrix rho_psd =
        eig.eigenvectors * clipped.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();

    ReconstructionReport report{DensityOperator::from_matrix(rho_psd, tol), 0.0,
                                completeness.rank, completeness.condition_number,
                                (rho_psd - rho_ls).norm()};
    double sq = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto &psi = projectors[k].representative();
        const double predicted = psi.dot(report.rho.matrix() * psi).real();
        const double r = predicted - values(static_cast<Eigen::Index>(k));
        sq += r * r;
    }
    report.residual_rms = std::sqrt(sq / static_cast<double>(samples.size()));
    return report;
}

std::optional<Projector> born_case_check(const DensityOperator &rho, const Tolerance &tol) {
    const auto eig = eig_hermitian(rho.matrix(), tol);
    const auto top = eig.eigenvalues.size() - 1;
    if (eig.eigenvalues(top) < 1.0 - tol.abs_eps()) {
        return std::nullopt;
    }
    return Projector::from_ray(eig.eigenvectors.col(top));
}

} // namespace csm::gleason
