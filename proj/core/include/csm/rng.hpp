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

#pragma once

#include <cstdint>

namespace csm {

/// Counter-based generator: the n-th draw of key k is a pure function of
/// (k, n), so streams are reproducible bit-for-bit on every platform and can
/// be split without shared state.
class CounterRng {
  public:
    explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}

    constexpr std::uint64_t key() const noexcept { return key_; }

    std::uint64_t bits(std::uint64_t counter) const noexcept;

    /// Uniform on [0, 1) with 53 random bits.
    double uniform(std::uint64_t counter) const noexcept;

    /// Independent child generator for sub-stream `stream`.
    CounterRng split(std::uint64_t stream) const noexcept;

  private:
    std::uint64_t key_;
};

/// Sequential cursor over a CounterRng.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) noexcept : rng_(seed) {}
    explicit RngStream(CounterRng rng) noexcept : rng_(rng) {}

    std::uint64_t next_bits() noexcept { return rng_.bits(counter_++); }
    double next_uniform() noexcept { return rng_.uniform(counter_++); }
    /// Standard normal via Box-Muller; consumes two draws.
    double next_normal() noexcept;

    std::uint64_t position() const noexcept { return counter_; }

  private:
    CounterRng rng_;
    std::uint64_t counter_ = 0;
};

} // namespace csm
