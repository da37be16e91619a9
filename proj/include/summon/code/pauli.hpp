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
#include <string>
#include <string_view>

#include "summon/gf2/bit_vector.hpp"

namespace summon::code {

/// Pauli operator modulo phase, in symplectic form [P_Z | P_X].
/// A qubit with both bits set carries Y.
class PauliOperator {
  public:
    PauliOperator() = default;
    explicit PauliOperator(std::size_t n_qubits) : z_(n_qubits), x_(n_qubits) {}
    PauliOperator(gf2::BitVector z_part, gf2::BitVector x_part);

    static PauliOperator identity(std::size_t n_qubits) { return PauliOperator(n_qubits); }
    static PauliOperator z_type(gf2::BitVector z_part);
    static PauliOperator x_type(gf2::BitVector x_part);
    /// One letter per qubit from {I, X, Y, Z}.
    static PauliOperator from_string(std::string_view letters);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return z_.size(); }
    [[nodiscard]] const gf2::BitVector &z_part() const noexcept { return z_; }
    [[nodiscard]] const gf2::BitVector &x_part() const noexcept { return x_; }

    /// Number of non-identity tensor factors.
    [[nodiscard]] std::size_t weight() const;
    [[nodiscard]] gf2::BitVector support() const;
    [[nodiscard]] bool is_identity() const { return z_.is_zero() && x_.is_zero(); }
    [[nodiscard]] std::string to_string() const;

    /// Product up to phase.
    PauliOperator &operator*=(const PauliOperator &other);
    friend PauliOperator operator*(PauliOperator a, const PauliOperator &b) { return a *= b; }
    friend bool operator==(const PauliOperator &, const PauliOperator &) = default;

  private:
    gf2::BitVector z_;
    gf2::BitVector x_;
};

/// Symplectic form: false iff the operators anti-commute.
bool commutes(const PauliOperator &p, const PauliOperator &q);

} // namespace summon::code
