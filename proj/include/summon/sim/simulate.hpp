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
#include <span>
#include <vector>

#include "summon/circuits/circuit.hpp"
#include "summon/sim/state_vector.hpp"

namespace summon::sim {

struct MeasurementRecord {
    /// ±1 per measurement, in circuit order.
    std::vector<int> outcomes;
    /// Born probability of each recorded outcome.
    std::vector<double> probabilities;
    std::uint64_t rng_seed = 0;

    /// Outcomes as bits (+1 → 0, -1 → 1).
    [[nodiscard]] std::vector<std::uint8_t> bits() const;

    friend bool operator==(const MeasurementRecord &, const MeasurementRecord &) = default;
};

struct CircuitRun {
    StateVector state;
    MeasurementRecord record;
};

/// Run `c` on a copy of `state`. Measurements sample the Born rule from a
/// CounterRng seeded with `seed` (one draw per measurement).
/// Throws DimensionMismatch if the qubit counts differ.
CircuitRun apply_circuit(const StateVector &state, const circuits::Circuit &c, std::uint64_t seed);

/// Same, but measurement k is forced to outcome bit forced[k]. Throws
/// CorruptedState when a forced branch has zero probability.
CircuitRun apply_circuit_forced(const StateVector &state, const circuits::Circuit &c,
                                std::span<const std::uint8_t> forced);

} // namespace summon::sim
