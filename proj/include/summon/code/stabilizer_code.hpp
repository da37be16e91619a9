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
#include <optional>
#include <vector>

#include "summon/code/pauli.hpp"
#include "summon/gf2/bit_matrix.hpp"
#include "summon/gf2/edge_index.hpp"

namespace summon::code {

/// Edge-indicator vector e_ij + e_jk + e_ki of the triangle on {i, j, k} in K_n.
gf2::BitVector triangle_vector(std::size_t i, std::size_t j, std::size_t k, std::size_t n);

/// Edge-indicator vector of all edges incident to vertex j in K_n.
gf2::BitVector star_vector(std::size_t j, std::size_t n);

/// CSS stabilizer code given by separate Z-type and X-type generator rows.
///
/// When `graph_order` is nonzero the qubits are the edges of K_graph_order in
/// canonical order, which is what the vertex-based erasure and decoding
/// routines rely on. Construction does not check commutation: a code built
/// from arbitrary rows is a valid object that simply fails verification.
class StabilizerCode {
  public:
    StabilizerCode(std::size_t graph_order, gf2::BitMatrix z_rows, gf2::BitMatrix x_rows,
                   std::optional<PauliOperator> logical_x = std::nullopt,
                   std::optional<PauliOperator> logical_z = std::nullopt);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return z_rows_.n_cols(); }
    /// Vertex count Ñ of the complete graph labelling the qubits (0 if none).
    [[nodiscard]] std::size_t graph_order() const noexcept { return graph_order_; }
    [[nodiscard]] gf2::EdgeIndexMap edges() const;

    [[nodiscard]] const gf2::BitMatrix &z_rows() const noexcept { return z_rows_; }
    [[nodiscard]] const gf2::BitMatrix &x_rows() const noexcept { return x_rows_; }
    [[nodiscard]] std::size_t n_generators() const noexcept {
        return z_rows_.n_rows() + x_rows_.n_rows();
    }

    /// Generator matrix in symplectic form [Z-part | X-part]; Z-type rows first.
    [[nodiscard]] gf2::BitMatrix h() const;
    [[nodiscard]] std::vector<PauliOperator> generators() const;

    [[nodiscard]] bool has_logicals() const noexcept { return logical_x_ && logical_z_; }
    /// Throws InvalidParameter if the code was built without logicals.
    [[nodiscard]] const PauliOperator &logical_x() const;
    [[nodiscard]] const PauliOperator &logical_z() const;

    /// Classical codes behind the CSS construction: C1⊥ is spanned by the
    /// Z-rows, C2 by the X-rows, and C1 = (C1⊥)⊥.
    [[nodiscard]] const gf2::BitMatrix &c1_perp() const noexcept { return z_rows_; }
    [[nodiscard]] const gf2::BitMatrix &c2() const noexcept { return x_rows_; }
    [[nodiscard]] gf2::BitMatrix c1() const;

    /// Copy with generator `row` toggled on `qubit` (within the row's own
    /// Z or X block). Used for mutation checks.
    [[nodiscard]] StabilizerCode with_flipped_bit(std::size_t row, std::size_t qubit) const;

  private:
    std::size_t graph_order_;
    gf2::BitMatrix z_rows_;
    gf2::BitMatrix x_rows_;
    std::optional<PauliOperator> logical_x_;
    std::optional<PauliOperator> logical_z_;
};

/// The summoning code on the edges of K_Ñ:
///   Z-rows  T_1jk for 2 <= j < k <= Ñ   (C(Ñ-1, 2) rows)
///   X-rows  A_1 + A_j for 2 <= j <= Ñ-1 (Ñ-2 rows)
///   X̄ = [0 | A_1], Z̄ = [A_1 | 0].
/// Throws InvalidParameter unless Ñ is even and at least 4.
StabilizerCode build_css(std::size_t n_tilde);

/// Ñ = 2⌈N/2⌉: number of vertices after adding the fictitious diamond for odd N.
std::size_t even_order(std::size_t n);

} // namespace summon::code
