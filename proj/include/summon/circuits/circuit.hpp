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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "summon/code/pauli.hpp"

namespace summon::circuits {

enum class GateKind : std::uint8_t {
    kH,
    kCnot,
    kCz,
    kX,
    kZ,
    kMeasurePauli,
    kXIf,
    kZIf,
};

inline constexpr std::size_t kGateKindCount = 8;

std::string_view gate_name(GateKind kind);

struct Gate {
    GateKind kind;
    /// Control first for CNOT. For a Pauli-product measurement: the support.
    std::vector<std::uint32_t> qubits;
    /// Written by a measurement, read by X_IF / Z_IF.
    std::optional<std::uint32_t> cbit;
    /// Measured observable (over all circuit qubits), measurements only.
    std::optional<code::PauliOperator> pauli;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Exact per-kind gate tally.
class GateCounts {
  public:
    [[nodiscard]] std::size_t operator[](GateKind kind) const {
        return counts_[static_cast<std::size_t>(kind)];
    }
    void add(GateKind kind) { ++counts_[static_cast<std::size_t>(kind)]; }
    [[nodiscard]] std::size_t total() const;
    /// Unitary gates only (excludes measurements and conditioned gates).
    [[nodiscard]] std::size_t unitary_total() const;

    friend bool operator==(const GateCounts &, const GateCounts &) = default;

  private:
    std::array<std::size_t, kGateKindCount> counts_{};
};

/// Ordered gate list over qubits [0, n_qubits) and classical bits
/// [0, n_cbits). Every append validates indices; classical bits must be
/// written by a measurement before a conditioned gate reads them.
class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t n_cbits() const noexcept { return n_cbits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }

    /// Per-qubit display labels (e.g. "e_1_2"); empty when unlabelled.
    [[nodiscard]] const std::vector<std::string> &labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels);

    void h(std::uint32_t q);
    void x(std::uint32_t q);
    void z(std::uint32_t q);
    void cnot(std::uint32_t control, std::uint32_t target);
    void cz(std::uint32_t a, std::uint32_t b);
    /// Projective measurement of a Pauli product; returns the written bit.
    /// Outcome +1 is recorded as 0, -1 as 1.
    std::uint32_t measure(const code::PauliOperator &observable);
    void x_if(std::uint32_t cbit, std::uint32_t q);
    void z_if(std::uint32_t cbit, std::uint32_t q);

    /// Validates and appends an arbitrary gate.
    void append(Gate gate);

    /// Qubits touched by any gate, ascending.
    [[nodiscard]] std::vector<std::uint32_t> touched_qubits() const;

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    void check_qubit(std::uint32_t q) const;

    std::size_t n_qubits_;
    std::size_t n_cbits_ = 0;
    std::vector<Gate> gates_;
    std::vector<std::string> labels_;
};

GateCounts gate_count(const Circuit &c);

} // namespace summon::circuits
