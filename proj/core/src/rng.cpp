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

#include "csm/rng.hpp"

#include <cmath>
#include <numbers>

namespace csm {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t finalize(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

// SplitMix64 evaluated at position `counter` of the sequence seeded by key.
std::uint64_t CounterRng::bits(std::uint64_t counter) const noexcept {
    return finalize(key_ + (counter + 1) * kGolden);
}

double CounterRng::uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
}

CounterRng CounterRng::split(std::uint64_t stream) const noexcept {
    return CounterRng(finalize(key_ ^ finalize(stream + 0x632BE59BD9B4E019ULL)));
}

double RngStream::next_normal() noexcept {
    const double u1 = 1.0 - next_uniform(); // (0, 1]
    const double u2 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace csm
