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

#include <cmath>
#include <vector>

#include "gtest/gtest.h"

#include "csm/error.hpp"
#include "csm/families.hpp"
#include "csm/random.hpp"
#include "test_support.hpp"

using namespace csm;
using csm::testing::born_oracle;
using csm::testing::ctx;
using csm::testing::vec;

namespace {

const double kS = 1.0 / std::sqrt(2.0);

Context tilted() {
    return ctx({vec({1, 0, 0}), vec({0, kS, kS}), vec({0, kS, -kS})}, "tilted");
}

ErrorKind kind_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.kind();
    }
    ADD_FAILURE() << "no exception";
    return ErrorKind::InvalidArgument;
}

} // namespace

TEST(projector, normalizes_and_quotients_phase) {
    const auto p = Projector::from_ray(vec({3, 4}));
    EXPECT_NEAR(p.representative().norm(), 1.0, 1e-15);
    const auto q = Projector::from_ray(std::polar(2.0, 1.1) * vec({3, 4}));
    EXPECT_LE((p.matrix() - q.matrix()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_NEAR(p.matrix().trace().real(), 1.0, 1e-15);
    EXPECT_EQ(kind_of([] { Projector::from_ray(vec({0, 0})); }), ErrorKind::InvalidArgument);
}

TEST(context, standard_basis_dim3) {
    const auto c = standard_context(3);
    ASSERT_EQ(c.size(), 3u);
    for (int i = 0; i < 3; ++i) {
        ComplexMatrix expect = ComplexMatrix::Zero(3, 3);
        expect(i, i) = 1.0;
        EXPECT_EQ(c.projector(i).matrix(), expect);
    }
}

TEST(context, fourier_is_complete) {
    const auto c = fourier_context(3);
    ComplexMatrix sum = ComplexMatrix::Zero(3, 3);
    for (const auto &p : c.projectors()) {
        sum += p.matrix();
    }
    EXPECT_LE((sum - ComplexMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
    const auto d = context_defects(c);
    EXPECT_LE(d.exclusivity, 1e-12);
    EXPECT_LE(d.completeness, 1e-12);
}

TEST(context, repeated_vector_is_not_orthonormal) {
    EXPECT_EQ(kind_of([] { ctx({vec({1, 0, 0}), vec({1, 0, 0}), vec({0, 0, 1})}); }),
              ErrorKind::NotOrthonormal);
    EXPECT_EQ(kind_of([] { ctx({vec({1, 0, 0}), vec({0, 1, 0})}); }), ErrorKind::DimensionMismatch);
}

TEST(born_probability, examples) {
    RngStream rng(3);
    const auto q = Projector::from_ray(random::unit_vector(3, rng));
    const auto rho_q = DensityOperator::from_projector(q);
    EXPECT_NEAR(born_probability(rho_q, q), 1.0, 1e-12);

    const auto c = standard_context(3);
    const auto e1 = DensityOperator::from_projector(c.projector(0));
    EXPECT_NEAR(born_probability(e1, c.projector(1)), 0.0, 1e-15);

    const auto mixed = DensityOperator::maximally_mixed(3);
    for (int k = 0; k < 10; ++k) {
        const auto p = Projector::from_ray(random::unit_vector(3, rng));
        EXPECT_NEAR(born_probability(mixed, p), 1.0 / 3.0, 1e-12);
    }
    EXPECT_EQ(kind_of([&] { born_probability(mixed, standard_context(4).projector(0)); }),
              ErrorKind::DimensionMismatch);
}

TEST(born_probability, rank_one_matches_inner_product) {
    RngStream rng(17);
    for (int n = 3; n <= 5; ++n) {
        for (int k = 0; k < 50; ++k) {
            const auto psi = random::unit_vector(n, rng);
            const auto phi = random::unit_vector(n, rng);
            const double oracle = std::norm(psi.dot(phi));
            const double got = born_probability(DensityOperator::from_projector(Projector::from_ray(psi)),
                                                Projector::from_ray(phi));
            EXPECT_NEAR(got, oracle, 1e-12);
        }
    }
}

TEST(context_distribution, examples) {
    const auto c = standard_context(3);
    const auto d = context_distribution(DensityOperator::from_projector(c.projector(0)), c);
    EXPECT_NEAR(d(0), 1.0, 1e-15);
    EXPECT_NEAR(d(1), 0.0, 1e-15);
    EXPECT_NEAR(d(2), 0.0, 1e-15);

    RngStream rng(4);
    const auto mixed = DensityOperator::maximally_mixed(3);
    for (int k = 0; k < 20; ++k) {
        const auto u = context_distribution(mixed, random::context(3, rng));
        for (int i = 0; i < 3; ++i) {
            EXPECT_NEAR(u(i), 1.0 / 3.0, 1e-12);
        }
    }
}

TEST(context_distribution, sums_to_one_on_random_contexts) {
    RngStream rng(2024);
    for (int n = 3; n <= 5; ++n) {
        const auto rho = random::density(n, rng);
        for (int k = 0; k < 1000; ++k) {
            const auto c = random::context(n, rng);
            const auto d = context_distribution(rho, c);
            ASSERT_NEAR(d.sum(), 1.0, 1e-10);
            for (int i = 0; i < n; ++i) {
                ASSERT_GE(d(i), -1e-10);
                ASSERT_LE(d(i), 1.0 + 1e-10);
                ASSERT_NEAR(d(i), born_oracle(rho.matrix(), c.projector(i).representative()), 1e-12);
            }
        }
    }
}

TEST(density_operator, validation) {
    ComplexMatrix neg = ComplexMatrix::Zero(3, 3);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    EXPECT_EQ(kind_of([&] { DensityOperator::from_matrix(neg); }), ErrorKind::ValueOutOfRange);
    ComplexMatrix nh = ComplexMatrix::Identity(3, 3) / 3.0;
    nh(0, 1) = 0.1;
    EXPECT_EQ(kind_of([&] { DensityOperator::from_matrix(nh); }), ErrorKind::NotHermitian);
    EXPECT_EQ(kind_of([] { DensityOperator::from_matrix(ComplexMatrix::Identity(3, 3)); }),
              ErrorKind::ValueOutOfRange);
}

TEST(exclusivity, examples) {
    const auto c = standard_context(3);
    const auto ms = modalities(c);
    EXPECT_TRUE(are_exclusive(ms[0], ms[1]));
    EXPECT_FALSE(are_exclusive(ms[0], ms[0]));

    const auto f = modalities(fourier_context(3));
    for (const auto &a : ms) {
        for (const auto &b : f) {
            EXPECT_NEAR(std::norm(a.projector.representative().dot(b.projector.representative())),
                        1.0 / 3.0, 1e-12);
            EXPECT_FALSE(are_exclusive(a, b));
        }
    }
}

TEST(extravalence, phase_and_cross_context) {
    const auto a = ctx({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})}, "A");
    const Complex ph = std::polar(1.0, 0.9);
    const auto b = ctx({ph * vec({1, 0, 0}), vec({0, kS, kS}), vec({0, kS, -kS})}, "B");
    EXPECT_TRUE(extravalent(modality(a, 0), modality(b, 0)));
    EXPECT_FALSE(extravalent(modality(a, 0), modality(a, 1)));
    EXPECT_FALSE(extravalent(modality(a, 1), modality(b, 1)));

    const auto t = tilted();
    EXPECT_LE((modality(a, 0).projector.matrix() - modality(t, 0).projector.matrix()).cwiseAbs().maxCoeff(),
              1e-15);
    EXPECT_TRUE(extravalent(modality(a, 0), modality(t, 0)));
}

TEST(extravalence, classes) {
    const auto c = standard_context(3);
    const std::vector<Modality> same{modality(c, 1), modality(c, 1), modality(c, 1)};
    const auto one = extravalence_classes(same);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].size(), 3u);

    const auto singles = extravalence_classes(modalities(c));
    EXPECT_EQ(singles.size(), 3u);

    std::vector<Modality> mixed = modalities(c);
    for (const auto &m : modalities(tilted())) {
        mixed.push_back(m);
    }
    for (const auto &m : modalities(fourier_context(3))) {
        mixed.push_back(m);
    }
    const auto classes = extravalence_classes(mixed);
    // Pairwise closure oracle: i, j share a class iff extravalent(i, j).
    std::vector<int> label(mixed.size(), -1);
    for (std::size_t k = 0; k < classes.size(); ++k) {
        for (auto i : classes[k]) {
            label[i] = static_cast<int>(k);
        }
    }
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        ASSERT_GE(label[i], 0);
        for (std::size_t j = 0; j < mixed.size(); ++j) {
            EXPECT_EQ(label[i] == label[j], extravalent(mixed[i], mixed[j])) << i << "," << j;
        }
    }
    EXPECT_EQ(classes.size(), mixed.size() - 1);
}

TEST(apply_transform, identity_and_fourier) {
    const auto c = standard_context(3);
    const auto same = apply_transform(c, ContextTransform::identity(3));
    for (int i = 0; i < 3; ++i) {
        EXPECT_EQ(same.projector(i).matrix(), c.projector(i).matrix());
    }
    const auto f = apply_transform(c, ContextTransform::make(fourier_matrix(3), false));
    const auto ref = fourier_context(3);
    for (int i = 0; i < 3; ++i) {
        EXPECT_LE((f.projector(i).matrix() - ref.projector(i).matrix()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(apply_transform, preserves_context_invariants) {
    RngStream rng(77);
    for (int n = 3; n <= 5; ++n) {
        for (int k = 0; k < 1000; ++k) {
            const auto c = random::context(n, rng);
            const bool anti = (k % 2) == 1;
            const auto g = ContextTransform::make(random::unitary(n, rng), anti);
            const auto d = context_defects(apply_transform(c, g));
            ASSERT_LE(d.exclusivity, 1e-9);
            ASSERT_LE(d.completeness, 1e-9);
        }
    }
}

TEST(context_transform, rejects_non_unitary) {
    EXPECT_EQ(kind_of([] { ContextTransform::make(2.0 * ComplexMatrix::Identity(3, 3), false); }),
              ErrorKind::InvalidArgument);
}
