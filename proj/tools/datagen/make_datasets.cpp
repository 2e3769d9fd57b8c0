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

// Regenerates the bundled datasets under <out>/ (default: ./datasets).
// Every random choice flows from fixed seeds, so reruns are byte-identical.

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "csm/families.hpp"
#include "csm/io/json_io.hpp"
#include "csm/random.hpp"

namespace fs = std::filesystem;
using csm::ComplexMatrix;
using csm::ComplexVector;
using csm::io::Json;

namespace {

void write(const fs::path &path, const Json &j) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path);
    out << j.dump(2) << '\n';
    std::cout << "wrote " << path.string() << '\n';
}

ComplexVector real_vector(std::initializer_list<double> xs) {
    ComplexVector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) {
        v(i++) = x;
    }
    return v;
}

Json real_vectors_json(const std::vector<ComplexVector> &vs) {
    Json out = Json::array();
    for (const auto &v : vs) {
        Json row = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) {
            row.push_back(v(i).real());
        }
        out.push_back(row);
    }
    return out;
}

// Index of `v` in `pool` up to sign, appending it when absent.
std::size_t intern(std::vector<ComplexVector> &pool, const ComplexVector &v) {
    const ComplexVector unit = v / v.norm();
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (std::abs(std::abs(pool[i].normalized().dot(unit)) - 1.0) < 1e-9) {
            return i;
        }
    }
    pool.push_back(v);
    return pool.size() - 1;
}

Json cabello18() {
    // Nine orthogonal bases in dimension 4; each ray lies in exactly two.
    const std::vector<std::array<std::array<double, 4>, 4>> bases = {{
        {{{0, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 0, 0}, {1, -1, 0, 0}}},
        {{{0, 0, 0, 1}, {0, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, -1, 0}}},
        {{{1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, 0, 0}, {0, 0, 1, 1}}},
        {{{1, -1, 1, -1}, {1, 1, 1, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}}},
        {{{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, -1}}},
        {{{1, -1, -1, 1}, {1, 1, 1, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}}},
        {{{1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 0, 0}, {0, 0, 1, 1}}},
        {{{1, 1, -1, 1}, {-1, 1, 1, 1}, {1, 0, 1, 0}, {0, 1, 0, -1}}},
        {{{1, 1, 1, -1}, {-1, 1, 1, 1}, {1, 0, 0, 1}, {0, 1, -1, 0}}},
    }};
    std::vector<ComplexVector> pool;
    Json basis_json = Json::array();
    for (const auto &b : bases) {
        Json idx = Json::array();
        for (const auto &v : b) {
            idx.push_back(intern(pool, real_vector({v[0], v[1], v[2], v[3]})));
        }
        basis_json.push_back(idx);
    }
    return Json{{"dim", 4}, {"vectors", real_vectors_json(pool)}, {"bases", basis_json}};
}

struct RealSystem {
    std::vector<ComplexVector> rays;
    std::vector<std::array<std::size_t, 3>> triads;
};

// The 33 rays in dimension 3 whose coordinates are permutations of
// (0,0,1), (0,1,±1), (0,1,±√2), (1,±1,±√2), with all orthogonal triads.
RealSystem peres33() {
    const double s = std::sqrt(2.0);
    const std::vector<std::array<double, 3>> seeds = {
        {0, 0, 1},  {0, 1, 1},  {0, 1, -1},  {0, 1, s},  {0, 1, -s},
        {1, 1, s},  {1, -1, s}, {1, 1, -s},  {1, -1, -s},
    };
    RealSystem sys;
    for (auto seed : seeds) {
        std::array<int, 3> perm{0, 1, 2};
        do {
            intern(sys.rays, real_vector({seed[static_cast<std::size_t>(perm[0])],
                                          seed[static_cast<std::size_t>(perm[1])],
                                          seed[static_cast<std::size_t>(perm[2])]}));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    auto orth = [&](std::size_t a, std::size_t b) {
        return std::abs(sys.rays[a].dot(sys.rays[b])) < 1e-9;
    };
    const auto m = sys.rays.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            for (std::size_t c = b + 1; c < m; ++c) {
                if (orth(a, b) && orth(a, c) && orth(b, c)) {
                    sys.triads.push_back({a, b, c});
                }
            }
        }
    }
    return sys;
}

// Completes every orthogonal pair not inside a triad with its cross product.
RealSystem complete_pairs(RealSystem sys) {
    const auto m = sys.rays.size();
    auto in_triad = [&](std::size_t a, std::size_t b) {
        for (const auto &t : sys.triads) {
            const bool has_a = t[0] == a || t[1] == a || t[2] == a;
            const bool has_b = t[0] == b || t[1] == b || t[2] == b;
            if (has_a && has_b) {
                return true;
            }
        }
        return false;
    };
    std::vector<std::array<std::size_t, 3>> extra;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            if (std::abs(sys.rays[a].dot(sys.rays[b])) > 1e-9 || in_triad(a, b)) {
                continue;
            }
            const Eigen::Vector3d u = sys.rays[a].real();
            const Eigen::Vector3d v = sys.rays[b].real();
            const Eigen::Vector3d w = u.cross(v);
            const auto c = intern(sys.rays, real_vector({w(0), w(1), w(2)}));
            std::array<std::size_t, 3> t{a, b, c};
            std::sort(t.begin(), t.end());
            if (std::find(extra.begin(), extra.end(), t) == extra.end()) {
                extra.push_back(t);
            }
        }
    }
    sys.triads.insert(sys.triads.end(), extra.begin(), extra.end());
    return sys;
}

Json real_system_json(const RealSystem &sys) {
    Json bases = Json::array();
    for (const auto &t : sys.triads) {
        bases.push_back(t);
    }
    return Json{{"dim", 3}, {"vectors", real_vectors_json(sys.rays)}, {"bases", bases}};
}

Json projector_json(const ComplexVector &v) {
    return Json{{"dim", v.size()}, {"vector", csm::io::to_json(v)}};
}

Json raymap(bool antiunitary, std::uint64_t seed) {
    const int n = 3;
    csm::RngStream rng(seed);
    const ComplexMatrix u = csm::random::unitary(n, rng);
    const auto fiducial = csm::standard_context(n, "fiducial");
    std::vector<ComplexVector> sources;
    for (const auto &p : fiducial.projectors()) {
        sources.push_back(p.representative());
    }
    for (const auto &v : csm::phase_gadget_vectors(fiducial)) {
        sources.push_back(v);
    }
    for (int k = 0; k < 6; ++k) {
        sources.push_back(csm::random::unit_vector(n, rng));
    }
    Json pairs = Json::array();
    for (const auto &s : sources) {
        const ComplexVector t = antiunitary ? ComplexVector(u * s.conjugate()) : ComplexVector(u * s);
        pairs.push_back({{"source", csm::io::to_json(s)}, {"target", csm::io::to_json(t)}});
    }
    return Json{{"dim", n},
                {"pairs", pairs},
                {"contexts", Json::array({csm::io::to_json(fiducial)})},
                {"covering_contexts", Json::array({"fiducial"})},
                {"generator", {{"matrix", csm::io::to_json(u)}, {"antiunitary", antiunitary}}}};
}

} // namespace

int main(int argc, char **argv) {
    const fs::path root = argc > 1 ? fs::path(argv[1]) : fs::path("datasets");
    const double r2 = 1.0 / std::sqrt(2.0);

    write(root / "ks" / "cabello18_dim4.json", cabello18());
    const auto peres = peres33();
    write(root / "ks" / "peres33_dim3.json", real_system_json(peres));
    write(root / "ks" / "peres33_completed_dim3.json", real_system_json(complete_pairs(peres)));
    write(root / "ks" / "single_basis_dim3.json",
          Json{{"dim", 3}, {"vectors", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, {"bases", {{0, 1, 2}}}});
    write(root / "ks" / "two_bases_dim3.json",
          Json{{"dim", 3},
               {"vectors", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, r2, r2}, {0, r2, -r2}}},
               {"bases", {{0, 1, 2}, {0, 3, 4}}}});
    write(root / "ks" / "nonorthogonal_dim3.json",
          Json{{"dim", 3}, {"vectors", {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}}, {"bases", {{0, 1, 2}}}});

    const auto std3 = csm::standard_context(3, "standard");
    const auto fourier3 = csm::fourier_context(3, "fourier");
    const ComplexVector e1 = ComplexVector::Unit(3, 0);
    const auto tilted = csm::make_context(
        std::vector<ComplexVector>{e1, real_vector({0, r2, r2}), real_vector({0, r2, -r2})}, "tilted");
    write(root / "contexts" / "standard_dim3.json", csm::io::to_json(std3));
    write(root / "contexts" / "fourier_dim3.json", csm::io::to_json(fourier3));
    write(root / "contexts" / "tilted_dim3.json", csm::io::to_json(tilted));
    write(root / "contexts" / "standard_dim4.json", csm::io::to_json(csm::standard_context(4)));
    write(root / "contexts" / "repeat_standard_dim3.json",
          Json{{"contexts", {csm::io::to_json(std3), csm::io::to_json(std3), csm::io::to_json(std3)}}});
    write(root / "contexts" / "extravalent_chain_dim3.json",
          Json{{"contexts", {csm::io::to_json(std3), csm::io::to_json(tilted),
                             csm::io::to_json(fourier3), csm::io::to_json(fourier3)}}});

    write(root / "states" / "maximally_mixed_dim3.json",
          csm::io::to_json(csm::DensityOperator::maximally_mixed(3)));
    write(root / "states" / "pure_e1_dim3.json",
          csm::io::to_json(csm::DensityOperator::from_projector(csm::Projector::from_ray(e1))));
    write(root / "states" / "e1_dim3.json", projector_json(e1));

    // Exact Born samples of a seeded random density operator over the four
    // mutually unbiased bases of dimension 3.
    {
        csm::RngStream rng(20240603);
        const auto rho = csm::random::density(3, rng);
        const auto mubs = csm::prime_mub_contexts(3);
        Json samples = Json::array();
        Json grouped = Json::array();
        for (const auto &c : mubs) {
            const auto probs = csm::context_distribution(rho, c);
            Json values = Json::array();
            for (std::size_t i = 0; i < c.size(); ++i) {
                samples.push_back({{"vector", csm::io::to_json(c.projector(i).representative())},
                                   {"value", probs(static_cast<Eigen::Index>(i))}});
                values.push_back(probs(static_cast<Eigen::Index>(i)));
            }
            Json entry = csm::io::to_json(c);
            entry["values"] = values;
            grouped.push_back(entry);
        }
        write(root / "gleason" / "demo_mub_dim3.json",
              Json{{"dim", 3}, {"samples", samples}, {"rho_true", csm::io::to_json(rho.matrix())}});
        write(root / "gleason" / "demo_grouped_dim3.json", Json{{"contexts", grouped}});

        Json single = Json::array();
        const auto probs = csm::context_distribution(rho, mubs[0]);
        for (std::size_t i = 0; i < 3; ++i) {
            single.push_back({{"vector", csm::io::to_json(mubs[0].projector(i).representative())},
                              {"value", probs(static_cast<Eigen::Index>(i))}});
        }
        write(root / "gleason" / "single_context_dim3.json", Json{{"dim", 3}, {"samples", single}});

        Json bad = csm::io::to_json(std3);
        bad["values"] = {0.5, 0.5, 0.5};
        write(root / "gleason" / "bad_normalization_dim3.json", Json{{"contexts", {bad}}});
    }
    {
        const csm::Complex i(0.0, 1.0);
        const std::vector<ComplexVector> rays = {
            real_vector({1, 0}), real_vector({0, 1}), real_vector({r2, r2}),
            (ComplexVector(2) << r2, i * r2).finished()};
        Json samples = Json::array();
        const std::array<double, 4> values{0.7, 0.3, 0.5, 0.5};
        for (std::size_t k = 0; k < rays.size(); ++k) {
            samples.push_back({{"vector", csm::io::to_json(rays[k])}, {"value", values[k]}});
        }
        write(root / "gleason" / "qubit_dim2.json", Json{{"dim", 2}, {"samples", samples}});
    }

    write(root / "uhlhorn" / "unitary_dim3.json", raymap(false, 7));
    write(root / "uhlhorn" / "antiunitary_dim3.json", raymap(true, 11));
    {
        // Truncated mid-document: must be rejected as malformed.
        const std::string full = raymap(false, 7).dump(2);
        std::ofstream(root / "uhlhorn" / "corrupted.json") << full.substr(0, 300);
    }
    {
        // e1 is sent onto a ray overlapping the fixed e2.
        const Json fixed2 = csm::io::to_json(ComplexVector(ComplexVector::Unit(3, 1)));
        const Json fixed3 = csm::io::to_json(ComplexVector(ComplexVector::Unit(3, 2)));
        Json pairs = Json::array();
        pairs.push_back({{"source", csm::io::to_json(e1)},
                         {"target", csm::io::to_json(ComplexVector(r2 * (e1 + ComplexVector::Unit(3, 1))))}});
        pairs.push_back({{"source", fixed2}, {"target", fixed2}});
        pairs.push_back({{"source", fixed3}, {"target", fixed3}});
        write(root / "uhlhorn" / "violation_dim3.json",
              Json{{"dim", 3}, {"pairs", pairs}, {"covering_contexts", Json::array({csm::io::to_json(std3)})}});
    }
    {
        // Identity on the gadget, complex conjugation on one extra ray: every
        // overlap modulus is kept but neither branch fits all triples.
        Json pairs = Json::array();
        const auto fid = csm::standard_context(3, "fiducial");
        for (const auto &p : fid.projectors()) {
            pairs.push_back({{"source", csm::io::to_json(p.representative())},
                             {"target", csm::io::to_json(p.representative())}});
        }
        for (const auto &v : csm::phase_gadget_vectors(fid)) {
            pairs.push_back({{"source", csm::io::to_json(v)}, {"target", csm::io::to_json(v)}});
        }
        ComplexVector psi(3);
        psi << 1.0, 2.0, csm::Complex(0.0, 3.0);
        pairs.push_back({{"source", csm::io::to_json(psi)}, {"target", csm::io::to_json(ComplexVector(psi.conjugate()))}});
        write(root / "uhlhorn" / "neither_dim3.json",
              Json{{"dim", 3}, {"pairs", pairs}, {"covering_contexts", Json::array({csm::io::to_json(fid)})}});
    }

    write(root / "perm" / "identity_n3.json", Json{{"n", 3}, {"images", {0, 1, 2}}});
    write(root / "perm" / "transposition_n3.json", Json{{"n", 3}, {"images", {1, 0, 2}}});
    write(root / "perm" / "cycle_n4.json", Json{{"n", 4}, {"images", {1, 2, 3, 0}}});
    write(root / "perm" / "malformed_n3.json", Json{{"n", 3}, {"images", {0, 0, 2}}});
    return 0;
}
