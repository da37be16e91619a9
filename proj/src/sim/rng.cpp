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
#include "summon/sim/rng.hpp"

#include <cmath>
#include <numbers>

namespace summon::sim {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t CounterRng::next_u64() {
    ++counter_;
    return mix(seed_ + counter_ * kGamma);
}

double CounterRng::next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::next_normal() {
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::pair<Amplitude, Amplitude> random_qubit_state(std::uint64_t seed) {
    CounterRng rng(seed);
    double v[4];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double &c : v) {
            c = rng.next_normal();
            norm += c * c;
        }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    return {Amplitude{v[0] / norm, v[1] / norm}, Amplitude{v[2] / norm, v[3] / norm}};
}

} // namespace summon::sim
