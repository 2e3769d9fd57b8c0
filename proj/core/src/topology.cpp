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

#include "csm/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "csm/error.hpp"

namespace csm::topology {
namespace {

// Eigenvalues this close to −1 take the phase +π.
constexpr double kBranchCutSnap = 1e-9;

} // namespace

Permutation Permutation::make(std::vector<int> images) {
    const auto n = images.size();
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "permutation must be nonempty");
    }
    std::vector<bool> seen(n, false);
    for (int x : images) {
        if (x < 0 || static_cast<std::size_t>(x) >= n || seen[static_cast<std::size_t>(x)]) {
            throw Error(ErrorKind::InvalidArgument,
                        "images are not a bijection on 0.." + std::to_string(n - 1));
        }
        seen[static_cast<std::size_t>(x)] = true;
    }
    return Permutation(std::move(images));
}

Permutation Permutation::identity(int n) {
    std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(images.begin(), images.end(), 0);
    return make(std::move(images));
}

Permutation Permutation::transposition(int n, int a, int b) {
    std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(images.begin(), images.end(), 0);
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
        throw Error(ErrorKind::InvalidArgument, "transposition needs two distinct indices below n");
    }
    std::swap(images[static_cast<std::size_t>(a)], images[static_cast<std::size_t>(b)]);
    return make(std::move(images));
}

int Permutation::sign() const {
    std::vector<bool> visited(images_.size(), false);
    int sign = 1;
    for (std::size_t start = 0; start < images_.size(); ++start) {
        if (visited[start]) {
            continue;
        }
        std::size_t length = 0;
        for (auto i = start; !visited[i]; i = static_cast<std::size_t>(images_[i])) {
            visited[i] = true;
            ++length;
        }
        if (length % 2 == 0) {
            sign = -sign;
        }
    }
    return sign;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> images(static_cast<std::size_t>(std::max(n, 0)));
    std::iota(images.begin(), images.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation::make(images));
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

ComplexMatrix permutation_matrix(const Permutation &sigma) {
    const int n = sigma.n();
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        p(sigma(i), i) = 1.0;
    }
    return p;
}

PathReport unitary_path_to_identity(const Permutation &sigma, int steps) {
    if (steps < 2) {
        throw Error(ErrorKind::InvalidArgument, "a path needs at least 2 samples");
    }
    const int n = sigma.n();
    const ComplexMatrix target = permutation_matrix(sigma);

    // P_σ is normal, so its Schur form is diagonal and Q is a unitary eigenbasis
    // (degenerate eigenspaces included).
    Eigen::ComplexSchur<ComplexMatrix> schur(target);
    const ComplexMatrix &q = schur.matrixU();
    const ComplexMatrix &t = schur.matrixT();
    RealVector phase(n);
    for (int k = 0; k < n; ++k) {
        const Complex lambda = t(k, k);
        phase(k) = std::abs(lambda + 1.0) <= kBranchCutSnap ? std::numbers::pi : std::arg(lambda);
    }

    PathReport report;
    report.steps = steps;
    report.generator = q * phase.cast<Complex>().asDiagonal() * q.adjoint();
    report.samples.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double time = static_cast<double>(k) / (steps - 1);
        ComplexVector diag(n);
        for (int j = 0; j < n; ++j) {
            diag(j) = std::polar(1.0, time * phase(j));
        }
        ComplexMatrix u = q * diag.asDiagonal() * q.adjoint();
        report.max_unitarity_deviation =
            std::max(report.max_unitarity_deviation, is_unitary(u).deviation);
        if (!report.samples.empty()) {
            report.max_step_distance =
                std::max(report.max_step_distance, max_abs(u - report.samples.back()));
        }
        report.samples.push_back(std::move(u));
    }
    report.endpoint_errors = {max_abs(report.samples.front() - ComplexMatrix::Identity(n, n)),
                              max_abs(report.samples.back() - target)};
    return report;
}

OrthogonalObstruction orthogonal_obstruction(const Permutation &sigma) {
    const int s = sigma.sign();
    return {s, s == 1};
}

} // namespace csm::topology
