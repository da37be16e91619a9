// Copyright 2026 The summon-qec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <cstdint>
#include <utility>

#include "summon/sim/kernels.hpp"

namespace summon::sim {

/// Counter-based stream: draw k is a SplitMix64 finalizer applied to
/// seed + (k + 1)·γ. Identical on every platform and compiler, unlike the
/// standard distributions.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t next_u64();
    /// Uniform on [0, 1) with 53 random bits.
    double next_unit();
    /// Standard normal via Box-Muller.
    double next_normal();

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

  private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

/// Haar-random single-qubit amplitudes (α, β) with |α|² + |β|² = 1.
std::pair<Amplitude, Amplitude> random_qubit_state(std::uint64_t seed);

} // namespace summon::sim
