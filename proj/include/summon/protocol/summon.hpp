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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "summon/code/stabilizer_code.hpp"
#include "summon/protocol/routing.hpp"
#include "summon/sim/density_matrix.hpp"
#include "summon/sim/simulate.hpp"

namespace summon::protocol {

struct SummoningRun {
    /// Diamond whose reveal agent decodes.
    std::size_t requested = 0;
    /// Diamonds that received the request (just {requested} for a single summons).
    std::vector<std::size_t> requested_set;
    /// Qubits that reached the decoding reveal agent, ascending edge index.
    std::vector<std::uint32_t> delivered;
    std::vector<std::string> delivered_labels;
    sim::MeasurementRecord record;
    double fidelity = 0.0;
    std::vector<Message> messages;
    std::uint64_t seed = 0;
    std::size_t n_tilde = 0;
};

struct DecodeResult {
    /// State of the decoder's control qubit.
    sim::DensityMatrix output;
    sim::MeasurementRecord record;
};

/// Run the erasure decoder for vertex r on an encoded register, using only
/// the `delivered` qubits; everything else is treated as erased.
/// Throws InsufficientQubits when the star of r is not fully delivered.
DecodeResult decode_at(const code::StabilizerCode &code, std::size_t r,
                       std::span<const std::uint32_t> delivered, const sim::StateVector &encoded,
                       std::uint64_t seed);

/// Encoder output for α|0⟩ + β|1⟩ placed on q_12.
sim::StateVector encode_qubit(const code::StabilizerCode &code, sim::Amplitude alpha,
                              sim::Amplitude beta);

/// Full single summons. Throws InvalidConfiguration, InvalidParameter (bad r
/// or non-normalized input), CausalityViolation or InsufficientQubits.
SummoningRun simulate_summon(const spacetime::Configuration &c, sim::Amplitude alpha,
                             sim::Amplitude beta, std::size_t r, std::uint64_t seed);

/// Earliest element of `requested_set` under `causal_order`, after checking
/// that the order is a permutation of the ids and is compatible with the
/// geometry: for a before b, y_a ≺ z_b and not y_b ≺ z_a.
std::size_t earliest_requested(const spacetime::Configuration &c,
                               const std::vector<std::size_t> &requested_set,
                               const std::vector<std::size_t> &causal_order);

/// Every diamond in `requested_set` receives the request and follows the
/// protocol; the earliest one's reveal agent decodes.
SummoningRun simulate_multi_request(const spacetime::Configuration &c,
                                    const std::vector<std::size_t> &requested_set,
                                    const std::vector<std::size_t> &causal_order,
                                    sim::Amplitude alpha, sim::Amplitude beta,
                                    std::uint64_t seed);

} // namespace summon::protocol
