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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "summon/code/pauli.hpp"
#include "summon/sim/kernels.hpp"

namespace summon::sim {

/// Largest register the dense simulator accepts.
inline constexpr std::size_t kMaxQubits = 26;

struct PauliMasks {
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    unsigned n_y = 0;
};

PauliMasks to_masks(const code::PauliOperator &p);

/// Dense pure state on n qubits. Amplitude index bit q is qubit q, so
/// qubit 0 is the least significant bit.
class StateVector {
  public:
    /// |0…0⟩.
    explicit StateVector(std::size_t n_qubits);

    /// Length must be a power of two; not renormalized.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);
    /// |0…0⟩ with qubit `q` replaced by α|0⟩ + β|1⟩.
    static StateVector with_qubit(std::size_t n_qubits, std::size_t q, Amplitude alpha,
                                  Amplitude beta);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Amplitude amplitude(std::size_t index) const { return amps_.at(index); }

    void h(std::size_t q);
    void x(std::size_t q);
    void z(std::size_t q);
    void cnot(std::size_t control, std::size_t target);
    void cz(std::size_t a, std::size_t b);
    /// Apply a Hermitian Pauli (Y = iXZ on doubly-set qubits).
    void apply_pauli(const code::PauliOperator &p);

    [[nodiscard]] double norm_sq() const;
    [[nodiscard]] double expectation(const code::PauliOperator &p) const;
    /// Probability of the +1 outcome when measuring p.
    [[nodiscard]] double probability_plus(const code::PauliOperator &p) const;

    /// Project onto the eigenspace of p for `outcome_bit` (0 ↔ +1, 1 ↔ -1)
    /// and renormalize. Throws CorruptedState for a zero-probability branch.
    void project(const code::PauliOperator &p, unsigned outcome_bit);

    /// ⟨this|other⟩.
    [[nodiscard]] Amplitude inner(const StateVector &other) const;

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    void check_qubit(std::size_t q) const;
    void check_pauli(const code::PauliOperator &p) const;

    std::size_t n_qubits_;
    std::vector<Amplitude> amps_;
};

double expectation(const StateVector &state, const code::PauliOperator &p);

/// Debug dump: u32 qubit count, then little-endian f64 (re, im) pairs.
void write_state_dump(std::ostream &out, const StateVector &state);
StateVector read_state_dump(std::istream &in);

} // namespace summon::sim
