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


#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "csm/families.hpp"
#include "csm/gleason.hpp"
#include "csm/io/json_io.hpp"
#include "csm/numerics.hpp"
#include "csm/partition.hpp"
#include "csm/random.hpp"
#include "csm/simulate.hpp"
#include "csm/topology.hpp"
#include "csm/uhlhorn.hpp"

using namespace csm;

namespace {

void BM_eig_hermitian(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(1);
    const ComplexMatrix h = random::hermitian(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eig_hermitian(h));
    }
}
BENCHMARK(BM_eig_hermitian)->Arg(3)->Arg(4)->Arg(8)->Arg(16);

void BM_gram_schmidt(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(2);
    std::vector<ComplexVector> vs;
    for (int k = 0; k < n; ++k) {
        vs.push_back(random::unit_vector(n, rng));
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(gram_schmidt(vs));
    }
}
BENCHMARK(BM_gram_schmidt)->Arg(3)->Arg(8)->Arg(16);

void BM_context_distribution(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(3);
    const auto rho = random::density(n, rng);
    const auto c = random::context(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(context_distribution(rho, c));
    }
}
BENCHMARK(BM_context_distribution)->Arg(3)->Arg(5)->Arg(16);

void BM_reconstruct_density(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(4);
    const auto rho = random::density(n, rng);
    std::vector<gleason::FrameSample> samples;
    for (const auto &p : pair_ray_family(n)) {
        samples.push_back({p, born_probability(rho, p)});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(gleason::reconstruct_density(samples));
    }
}
BENCHMARK(BM_reconstruct_density)->Arg(3)->Arg(4)->Arg(5)->Arg(8);

void BM_fit_transform(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    RngStream rng(5);
    const ComplexMatrix u = random::unitary(n, rng);
    const Context fid = standard_context(n, "fiducial");
    std::vector<ComplexVector> sources;
    for (const auto &p : fid.projectors()) {
        sources.push_back(p.representative());
    }
    for (auto &g : phase_gadget_vectors(fid)) {
        sources.push_back(g);
    }
    for (int k = 0; k < 10; ++k) {
        sources.push_back(random::unit_vector(n, rng));
    }
    std::vector<uhlhorn::RayPair> pairs;
    for (const auto &s : sources) {
        pairs.push_back({Projector::from_ray(s), Projector::from_ray(u * s)});
    }
    const auto map = uhlhorn::RayMap::make(std::move(pairs), {fid});
    for (auto _ : state) {
        benchmark::DoNotOptimize(uhlhorn::fit_transform(map));
    }
}
BENCHMARK(BM_fit_transform)->Arg(3)->Arg(4)->Arg(5);

void BM_ks_search(benchmark::State &state, const std::string &name) {
    const auto inst = partition::load_ks_instance(
        io::parse_ks_document(io::load_json_file(std::string(CSM_DATASETS_DIR) + "/ks/" + name)));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        const auto r = partition::search_assignment(inst);
        nodes = r.nodes_explored;
        benchmark::DoNotOptimize(r);
    }
    state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK_CAPTURE(BM_ks_search, cabello18, std::string("cabello18_dim4.json"));
BENCHMARK_CAPTURE(BM_ks_search, peres33, std::string("peres33_dim3.json"));
BENCHMARK_CAPTURE(BM_ks_search, peres33_completed, std::string("peres33_completed_dim3.json"));

void BM_simulate_sequence(benchmark::State &state) {
    const int n = 3;
    const std::vector<Context> seq{standard_context(n), fourier_context(n), standard_context(n), fourier_context(n)};
    const auto start = seq[0].projector(0);
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_sequence(start, seq, seed++));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seq.size()));
}
BENCHMARK(BM_simulate_sequence);

void BM_unitary_path(benchmark::State &state) {
    const auto sigma = topology::Permutation::make({1, 2, 3, 0});
    const int steps = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(topology::unitary_path_to_identity(sigma, steps));
    }
}
BENCHMARK(BM_unitary_path)->Arg(101)->Arg(1001);

} // namespace

BENCHMARK_MAIN();
