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

#include "csm/families.hpp"

#include <cmath>
#include <numbers>

#include "csm/error.hpp"

namespace csm {
namespace {

Complex root_of_unity(long long k, int n) {
    const long long r = ((k % n) + n) % n;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / n;
    return std::polar(1.0, angle);
}

bool is_odd_prime(int p) {
    if (p < 3 || p % 2 == 0) {
        return false;
    }
    for (int d = 3; d * d <= p; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<ComplexVector> columns(const ComplexMatrix &m) {
    std::vector<ComplexVector> out;
    out.reserve(m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        out.emplace_back(m.col(j));
    }
    return out;
}

} // namespace

Context standard_context(int dim, std::string label) {
    if (dim <= 0) {
        throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    }
    return make_context(columns(ComplexMatrix::Identity(dim, dim)), std::move(label));
}

ComplexMatrix fourier_matrix(int dim) {
    if (dim <= 0) {
        throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    }
    ComplexMatrix f(dim, dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (int j = 0; j < dim; ++j) {
        for (int k = 0; k < dim; ++k) {
            f(j, k) = scale * root_of_unity(static_cast<long long>(j) * k, dim);
        }
    }
    return f;
}

Context fourier_context(int dim, std::string label) {
    return make_context(columns(fourier_matrix(dim)), std::move(label));
}

std::vector<Context> prime_mub_contexts(int p) {
    if (!is_odd_prime(p)) {
        throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not an odd prime");
    }
    std::vector<Context> out;
    out.push_back(standard_context(p, "mub-standard"));
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (int k = 0; k < p; ++k) {
        ComplexMatrix b(p, p);
        for (int j = 0; j < p; ++j) {
            for (int m = 0; m < p; ++m) {
                b(m, j) = scale * root_of_unity(static_cast<long long>(k) * m * m +
                                                    static_cast<long long>(j) * m,
                                                p);
            }
        }
        out.push_back(make_context(columns(b), "mub-" + std::to_string(k)));
    }
    return out;
}

std::vector<ComplexVector> phase_gadget_vectors(const Context &fiduciary) {
    const int n = fiduciary.dim();
    const Complex i(0.0, 1.0);
    const double s = 1.0 / std::sqrt(2.0);
    const auto &e1 = fiduciary.projector(0).representative();
    std::vector<ComplexVector> out;
    for (int k = 1; k < n; ++k) {
        out.emplace_back(s * (e1 + fiduciary.projector(k).representative()));
    }
    for (int k = 1; k < n; ++k) {
        out.emplace_back(s * (e1 + i * fiduciary.projector(k).representative()));
    }
    return out;
}

std::vector<Projector> pair_ray_family(int dim) {
    if (dim <= 0) {
        throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
    }
    const Complex i(0.0, 1.0);
    std::vector<Projector> out;
    for (int j = 0; j < dim; ++j) {
        out.push_back(Projector::from_ray(ComplexVector::Unit(dim, j)));
    }
    for (int j = 0; j < dim; ++j) {
        for (int k = j + 1; k < dim; ++k) {
            const ComplexVector ej = ComplexVector::Unit(dim, j);
            const ComplexVector ek = ComplexVector::Unit(dim, k);
            out.push_back(Projector::from_ray(ej + ek));
            out.push_back(Projector::from_ray(ej + i * ek));
        }
    }
    return out;
}

} // namespace csm
