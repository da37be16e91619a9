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
#include "summon/code/stabilizer_code.hpp"

#include <utility>

#include "summon/error.hpp"

namespace summon::code {

gf2::BitVector triangle_vector(std::size_t i, std::size_t j, std::size_t k, std::size_t n) {
    if (i == j || j == k || i == k) {
        throw InvalidParameter("triangle vertices must be distinct");
    }
    const gf2::EdgeIndexMap edges(n);
    gf2::BitVector v(edges.edge_count());
    v.set(edges.index(i, j));
    v.set(edges.index(j, k));
    v.set(edges.index(k, i));
    return v;
}

gf2::BitVector star_vector(std::size_t j, std::size_t n) {
    const gf2::EdgeIndexMap edges(n);
    if (j < 1 || j > n) {
        throw InvalidParameter("star vertex " + std::to_string(j) + " outside [1, " +
                               std::to_string(n) + "]");
    }
    gf2::BitVector v(edges.edge_count());
    for (std::size_t l = 1; l <= n; ++l) {
        if (l != j) {
            v.set(edges.index(l, j));
        }
    }
    return v;
}

StabilizerCode::StabilizerCode(std::size_t graph_order, gf2::BitMatrix z_rows,
                               gf2::BitMatrix x_rows, std::optional<PauliOperator> logical_x,
                               std::optional<PauliOperator> logical_z)
    : graph_order_(graph_order), z_rows_(std::move(z_rows)), x_rows_(std::move(x_rows)),
      logical_x_(std::move(logical_x)), logical_z_(std::move(logical_z)) {
    if (z_rows_.n_cols() != x_rows_.n_cols()) {
        throw DimensionMismatch("Z and X generator blocks have different widths");
    }
    if (graph_order_ != 0 && gf2::choose2(graph_order_) != n_qubits()) {
        throw DimensionMismatch("qubit count is not C(" + std::to_string(graph_order_) + ",2)");
    }
    for (const auto *logical : {&logical_x_, &logical_z_}) {
        if (*logical && (*logical)->n_qubits() != n_qubits()) {
            throw DimensionMismatch("logical operator acts on the wrong number of qubits");
        }
    }
}

gf2::EdgeIndexMap StabilizerCode::edges() const {
    if (graph_order_ == 0) {
        throw InvalidParameter("code qubits carry no edge labelling");
    }
    return gf2::EdgeIndexMap(graph_order_);
}

gf2::BitMatrix StabilizerCode::h() const {
    const std::size_t n = n_qubits();
    gf2::BitMatrix out(2 * n);
    for (const auto &p : generators()) {
        gf2::BitVector row(2 * n);
        for (const std::size_t i : p.z_part().support()) {
            row.set(i);
        }
        for (const std::size_t i : p.x_part().support()) {
            row.set(n + i);
        }
        out.append_row(std::move(row));
    }
    return out;
}

std::vector<PauliOperator> StabilizerCode::generators() const {
    std::vector<PauliOperator> out;
    out.reserve(n_generators());
    for (const auto &r : z_rows_.rows()) {
        out.push_back(PauliOperator::z_type(r));
    }
    for (const auto &r : x_rows_.rows()) {
        out.push_back(PauliOperator::x_type(r));
    }
    return out;
}

const PauliOperator &StabilizerCode::logical_x() const {
    if (!logical_x_) {
        throw InvalidParameter("code has no logical X operator");
    }
    return *logical_x_;
}

const PauliOperator &StabilizerCode::logical_z() const {
    if (!logical_z_) {
        throw InvalidParameter("code has no logical Z operator");
    }
    return *logical_z_;
}

gf2::BitMatrix StabilizerCode::c1() const { return gf2::kernel(z_rows_); }

StabilizerCode StabilizerCode::with_flipped_bit(std::size_t row, std::size_t qubit) const {
    if (row >= n_generators() || qubit >= n_qubits()) {
        throw InvalidParameter("fault position outside the generator matrix");
    }
    gf2::BitMatrix z = z_rows_;
    gf2::BitMatrix x = x_rows_;
    if (row < z.n_rows()) {
        z.row(row).flip(qubit);
    } else {
        x.row(row - z.n_rows()).flip(qubit);
    }
    return {graph_order_, std::move(z), std::move(x), logical_x_, logical_z_};
}

StabilizerCode build_css(std::size_t n_tilde) {
    if (n_tilde < 4 || n_tilde % 2 != 0) {
        throw InvalidParameter("summoning code needs an even vertex count >= 4, got " +
                               std::to_string(n_tilde));
    }
    const std::size_t n_qubits = gf2::choose2(n_tilde);
    gf2::BitMatrix z_rows(n_qubits);
    for (std::size_t j = 2; j <= n_tilde; ++j) {
        for (std::size_t k = j + 1; k <= n_tilde; ++k) {
            z_rows.append_row(triangle_vector(1, j, k, n_tilde));
        }
    }
    const gf2::BitVector a1 = star_vector(1, n_tilde);
    gf2::BitMatrix x_rows(n_qubits);
    for (std::size_t j = 2; j <= n_tilde - 1; ++j) {
        x_rows.append_row(a1 ^ star_vector(j, n_tilde));
    }
    return {n_tilde, std::move(z_rows), std::move(x_rows), PauliOperator::x_type(a1),
            PauliOperator::z_type(a1)};
}

std::size_t even_order(std::size_t n) { return n + (n % 2); }

} // namespace summon::code
