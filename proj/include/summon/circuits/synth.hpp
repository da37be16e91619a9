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

#include "summon/circuits/circuit.hpp"
#include "summon/code/stabilizer_code.hpp"
#include "summon/graph.hpp"

namespace summon::circuits {

/// Encoder for the summoning code. Input convention: q_12 holds |ψ⟩, every
/// other qubit starts in |0⟩.
///   stage 1: CNOT q_12 -> q_1i for i = 3..Ñ, giving α|0⟩ + β|A_1⟩;
///   stage 2: for j = 2..Ñ-1, H on q_jÑ then CNOT from q_jÑ to the rest of
///            supp(A_1 + A_j), which applies (I + X^{A_1+A_j}) up to norm.
circuits::Circuit synth_encoder(const code::StabilizerCode &code);

/// Qubit bookkeeping shared by the decoder circuit and the classical
/// branch resolution.
struct DecoderLayout {
    std::size_t vertex = 0;
    /// Star qubits {q_rk}, ascending k (equivalently ascending edge index).
    std::vector<std::uint32_t> held;
    /// Fan-out control; ends up carrying α|0⟩ + β|1⟩.
    std::uint32_t control = 0;
    /// Parity outcomes whose XOR decides whether the control must be flipped.
    std::vector<std::uint32_t> correction_outcomes;
};

DecoderLayout decoder_layout(const code::StabilizerCode &code, std::size_t r);

/// Branch string y_r (length Ñ-1, held-qubit order) selected by the parity
/// outcomes: of the two strings consistent with the parities, the one that
/// is the projection of some C2 element onto the star of r. Throws
/// CorruptedState if neither or both candidates qualify.
gf2::BitVector resolve_branch(const code::StabilizerCode &code, std::size_t r,
                              std::span<const std::uint8_t> outcomes);

/// Erasure decoder run by the reveal agent at vertex r. Acts only on the
/// Ñ-1 star qubits:
///   1. measure Z_{held[i]} Z_{held[i+1]} for i = 0..Ñ-3;
///   2. X on the control conditioned on each correction outcome;
///   3. CNOT fan-out from the control to the other held qubits.
/// Afterwards the control holds |ψ⟩ and the other held qubits are in a
/// computational basis state.
circuits::Circuit synth_decoder(const code::StabilizerCode &code, std::size_t r);

/// |V| Hadamards followed by one CZ per edge.
circuits::Circuit synth_graph_state(const Graph &graph);

} // namespace summon::circuits
