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

#include "csm/uhlhorn.hpp"

#include <cmath>

#include "csm/error.hpp"
#include "csm/families.hpp"

namespace csm::uhlhorn {
namespace {

// Entries below this modulus are skipped when fixing the global phase.
constexpr double kPhaseAnchorThreshold = 1e-8;

bool same_ray(const Projector &a, const Projector &b, const Tolerance &tol) {
    return max_abs(a.matrix() - b.matrix()) <= tol.abs_eps();
}

// ‖|a⟩⟨a|b⟩⟨b|‖_max for unit vectors a, b.
double product_norm(const ComplexVector &a, const ComplexVector &b) {
    return std::abs(a.dot(b)) * a.cwiseAbs().maxCoeff() * b.cwiseAbs().maxCoeff();
}

ComplexMatrix gram(const std::vector<RayPair> &pairs, bool targets) {
    const auto m = static_cast<Eigen::Index>(pairs.size());
    const int n = pairs.front().source.dim();
    ComplexMatrix reps(n, m);
    for (Eigen::Index k = 0; k < m; ++k) {
        const auto &pair = pairs[static_cast<std::size_t>(k)];
        reps.col(k) = targets ? pair.target.representative() : pair.source.representative();
    }
    return reps.adjoint() * reps;
}

std::string triple_name(std::size_t i, std::size_t j, std::size_t k) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) + ")";
}

} // namespace

RayMap RayMap::make(std::vector<RayPair> pairs, std::vector<Context> covering_contexts,
                    const Tolerance &tol) {
    if (pairs.empty()) {
        throw Error(ErrorKind::InvalidRayMap, "ray map has no pairs");
    }
    const int n = pairs.front().source.dim();
    if (n < 3) {
        throw Error(ErrorKind::DimensionTooSmall,
                    "ray maps need dimension at least 3, got " + std::to_string(n));
    }
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[k].source.dim() != n || pairs[k].target.dim() != n) {
            throw Error(ErrorKind::InvalidRayMap,
                        "pair " + std::to_string(k) + " does not have dimension " + std::to_string(n));
        }
    }
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (same_ray(pairs[i].source, pairs[j].source, tol)) {
                throw Error(ErrorKind::InvalidRayMap, "sources " + std::to_string(i) + " and " +
                                                          std::to_string(j) + " coincide");
            }
            if (same_ray(pairs[i].target, pairs[j].target, tol)) {
                throw Error(ErrorKind::InvalidRayMap, "targets " + std::to_string(i) + " and " +
                                                          std::to_string(j) + " coincide");
            }
        }
    }
    RayMap map(n, std::move(pairs), {});
    for (const auto &c : covering_contexts) {
        if (c.dim() != n) {
            throw Error(ErrorKind::InvalidRayMap, "covering context '" + c.label() +
                                                      "' has dimension " + std::to_string(c.dim()));
        }
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!map.find_source(c.projector(i), tol)) {
                throw Error(ErrorKind::InvalidRayMap, "projector " + std::to_string(i) +
                                                          " of covering context '" + c.label() +
                                                          "' is not among the sources");
            }
        }
    }
    map.covering_ = std::move(covering_contexts);
    return map;
}

std::optional<std::size_t> RayMap::find_source(const Projector &p, const Tolerance &tol) const {
    for (std::size_t k = 0; k < pairs_.size(); ++k) {
        if (same_ray(pairs_[k].source, p, tol)) {
            return k;
        }
    }
    return std::nullopt;
}

OrthogonalityCheck check_orthogonality_preserving(const RayMap &m, const Tolerance &tol) {
    const auto &pairs = m.pairs();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            const double s =
                product_norm(pairs[i].source.representative(), pairs[j].source.representative());
            const double t =
                product_norm(pairs[i].target.representative(), pairs[j].target.representative());
            if ((s <= tol.abs_eps()) != (t <= tol.abs_eps())) {
                return {false, OrthogonalityViolation{i, j, s, t}};
            }
        }
    }
    return {true, std::nullopt};
}

Complex bargmann_invariant(const Projector &p1, const Projector &p2, const Projector &p3) {
    if (p1.dim() != p2.dim() || p2.dim() != p3.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "bargmann_invariant needs projectors of equal dimension");
    }
    return (p1.matrix() * p2.matrix() * p3.matrix()).trace();
}

std::string_view to_string(Branch b) {
    switch (b) {
    case Branch::Unitary:
        return "Unitary";
    case Branch::Antiunitary:
        return "Antiunitary";
    case Branch::Neither:
        return "Neither";
    case Branch::Inconclusive:
        return "Inconclusive";
    }
    return "Unknown";
}

TransformClassification classify_transform(const RayMap &m, const Tolerance &tol) {
    const auto check = check_orthogonality_preserving(m, tol);
    if (!check) {
        const auto &v = *check.counterexample;
        throw Error(ErrorKind::HypothesisViolated,
                    "orthogonality not preserved for rays " + std::to_string(v.first) + " and " +
                        std::to_string(v.second));
    }
    const auto &pairs = m.pairs();
    const ComplexMatrix gs = gram(pairs, false);
    const ComplexMatrix gt = gram(pairs, true);
    const std::size_t count = pairs.size();

    bool unitary_ok = true;
    bool antiunitary_ok = true;
    bool any_nonreal = false;
    std::optional<WitnessTriple> strongest;
    std::optional<WitnessTriple> first_mismatch;
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            for (std::size_t k = j + 1; k < count; ++k) {
                const auto ii = static_cast<Eigen::Index>(i);
                const auto jj = static_cast<Eigen::Index>(j);
                const auto kk = static_cast<Eigen::Index>(k);
                const Complex src = gs(ii, jj) * gs(jj, kk) * gs(kk, ii);
                if (std::abs(src.imag()) <= tol.abs_eps()) {
                    continue;
                }
                any_nonreal = true;
                const Complex dst = gt(ii, jj) * gt(jj, kk) * gt(kk, ii);
                const bool as_unitary = std::abs(dst - src) <= tol.abs_eps();
                const bool as_antiunitary = std::abs(dst - std::conj(src)) <= tol.abs_eps();
                unitary_ok = unitary_ok && as_unitary;
                antiunitary_ok = antiunitary_ok && as_antiunitary;
                const WitnessTriple w{{i, j, k}, src, dst};
                if (!as_unitary && !as_antiunitary && !first_mismatch) {
                    first_mismatch = w;
                }
                if (!strongest || std::abs(src.imag()) > std::abs(strongest->source_invariant.imag())) {
                    strongest = w;
                }
            }
        }
    }
    if (!any_nonreal) {
        return {Branch::Inconclusive, std::nullopt};
    }
    if (unitary_ok) {
        return {Branch::Unitary, strongest};
    }
    if (antiunitary_ok) {
        return {Branch::Antiunitary, strongest};
    }
    // Mixed evidence: report a triple matching neither branch, or failing that
    // the strongest one (each branch is contradicted by some other triple).
    return {Branch::Neither, first_mismatch ? first_mismatch : strongest};
}

FitReport fit_transform(const RayMap &m, const Tolerance &tol) {
    const auto classification = classify_transform(m, tol);
    if (classification.verdict == Branch::Neither) {
        const auto &w = *classification.witness;
        throw Error(ErrorKind::HypothesisViolated,
                    "map is neither unitary nor anti-unitary on triple " +
                        triple_name(w.indices[0], w.indices[1], w.indices[2]));
    }
    const int n = m.dim();
    const auto &pairs = m.pairs();

    const Context *fiduciary = nullptr;
    std::vector<std::size_t> basis_idx;
    std::vector<std::size_t> gadget_idx;
    for (const auto &c : m.covering_contexts()) {
        std::vector<std::size_t> found_basis;
        for (std::size_t i = 0; i < c.size(); ++i) {
            found_basis.push_back(*m.find_source(c.projector(i), tol));
        }
        std::vector<std::size_t> found_gadget;
        for (const auto &v : phase_gadget_vectors(c)) {
            const auto idx = m.find_source(Projector::from_ray(v), tol);
            if (!idx) {
                break;
            }
            found_gadget.push_back(*idx);
        }
        if (found_gadget.size() == 2 * static_cast<std::size_t>(n - 1)) {
            fiduciary = &c;
            basis_idx = std::move(found_basis);
            gadget_idx = std::move(found_gadget);
            break;
        }
    }
    if (fiduciary == nullptr) {
        throw Error(ErrorKind::MissingGadget,
                    "no covering context has all of its (e1+ek)/√2 and (e1+i·ek)/√2 rays listed");
    }

    // Images f_k of the fiduciary rays, rephased so that U e_k = c_k f_k.
    std::vector<ComplexVector> f;
    for (auto idx : basis_idx) {
        f.push_back(pairs[idx].target.representative());
    }
    std::vector<Complex> phase(static_cast<std::size_t>(n), Complex(1.0, 0.0));
    int gadget_votes_antiunitary = 0;
    const Complex i_unit(0.0, 1.0);
    for (int k = 1; k < n; ++k) {
        const auto &g = pairs[gadget_idx[static_cast<std::size_t>(k - 1)]].target.representative();
        const auto &h =
            pairs[gadget_idx[static_cast<std::size_t>(n - 1 + k - 1)]].target.representative();
        const Complex anchor_g = f[0].dot(g);
        const Complex anchor_h = f[0].dot(h);
        if (std::abs(anchor_g) < kPhaseAnchorThreshold || std::abs(anchor_h) < kPhaseAnchorThreshold) {
            throw Error(ErrorKind::FitFailed, "gadget image for k=" + std::to_string(k + 1) +
                                                  " has no overlap with the image of e1");
        }
        Complex ck = f[static_cast<std::size_t>(k)].dot(g) / anchor_g;
        ck /= std::abs(ck);
        phase[static_cast<std::size_t>(k)] = ck;
        // The imaginary gadget maps to f1 + i c_k f_k (unitary) or f1 − i c_k f_k.
        const Complex ratio = f[static_cast<std::size_t>(k)].dot(h) / anchor_h;
        if (std::abs(ratio + i_unit * ck) < std::abs(ratio - i_unit * ck)) {
            ++gadget_votes_antiunitary;
        }
    }
    const bool gadget_antiunitary = 2 * gadget_votes_antiunitary > (n - 1);

    bool antiunitary = false;
    bool ambiguous = false;
    switch (classification.verdict) {
    case Branch::Unitary:
        antiunitary = false;
        break;
    case Branch::Antiunitary:
        antiunitary = true;
        break;
    default:
        ambiguous = true;
        antiunitary = false;
        break;
    }
    if (!ambiguous && gadget_antiunitary != antiunitary) {
        throw Error(ErrorKind::FitFailed, "phase gadget disagrees with the Bargmann classification");
    }

    ComplexMatrix images(n, n);
    for (int k = 0; k < n; ++k) {
        images.col(k) = phase[static_cast<std::size_t>(k)] * f[static_cast<std::size_t>(k)];
    }
    const ComplexMatrix e = fiduciary->basis_matrix();
    // Unitary: U = M E†. Anti-unitary, ψ ↦ M conj(E†ψ) = (M Eᵀ) ψ*.
    ComplexMatrix u = antiunitary ? ComplexMatrix(images * e.transpose())
                                  : ComplexMatrix(images * e.adjoint());
    for (Eigen::Index r = 0; r < u.rows(); ++r) {
        const Complex x = u(r, 0);
        if (std::abs(x) > kPhaseAnchorThreshold) {
            u *= std::conj(x) / std::abs(x);
            break;
        }
    }

    const auto unitarity = is_unitary(u, tol);
    if (!unitarity) {
        throw Error(ErrorKind::FitFailed, "fitted operator deviates from unitarity by " +
                                              std::to_string(unitarity.deviation));
    }
    auto transform = ContextTransform::make(std::move(u), antiunitary, tol);
    double residual = 0.0;
    for (const auto &pair : pairs) {
        residual = std::max(residual, max_abs(pair.target.matrix() - transform.act(pair.source.matrix())));
    }
    if (residual > kFitResidualBound) {
        throw Error(ErrorKind::FitFailed, "fit residual " + std::to_string(residual) +
                                              " exceeds " + std::to_string(kFitResidualBound));
    }
    const Branch verdict = antiunitary ? Branch::Antiunitary : Branch::Unitary;
    return FitReport{std::move(transform), verdict, ambiguous, residual, fiduciary->label()};
}

double distance_up_to_phase(const ComplexMatrix &a, const ComplexMatrix &b) {
    const Complex overlap = (b.adjoint() * a).trace();
    const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
    return max_abs(a - phase * b);
}

} // namespace csm::uhlhorn
