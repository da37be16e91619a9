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
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "summon/gf2/bit_vector.hpp"

namespace summon::gf2 {

/// Dense GF(2) matrix stored as packed rows.
class BitMatrix {
  public:
    explicit BitMatrix(std::size_t n_cols = 0) : n_cols_(n_cols) {}
    /// All rows must share one length; `n_cols` is taken from the first row.
    explicit BitMatrix(std::vector<BitVector> rows);
    BitMatrix(std::size_t n_cols, std::vector<BitVector> rows);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_strings(std::initializer_list<const char *> rows);

    [[nodiscard]] std::size_t n_rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t n_cols() const noexcept { return n_cols_; }
    [[nodiscard]] bool empty() const noexcept { return rows_.empty(); }

    [[nodiscard]] const BitVector &row(std::size_t i) const { return rows_.at(i); }
    [[nodiscard]] BitVector &row(std::size_t i) { return rows_.at(i); }
    [[nodiscard]] const std::vector<BitVector> &rows() const noexcept { return rows_; }
    [[nodiscard]] bool get(std::size_t r, std::size_t c) const { return rows_.at(r).get(c); }

    void append_row(BitVector row);

    /// M v, one parity per row.
    [[nodiscard]] BitVector multiply(const BitVector &v) const;
    [[nodiscard]] BitMatrix transpose() const;
    /// Keep only the listed columns, in the given order.
    [[nodiscard]] BitMatrix select_columns(std::span<const std::size_t> cols) const;

    [[nodiscard]] std::vector<std::string> to_strings() const;

    friend bool operator==(const BitMatrix &, const BitMatrix &) = default;

  private:
    std::size_t n_cols_ = 0;
    std::vector<BitVector> rows_;
};

/// Reduced row-echelon form of a matrix. Nonzero rows only; `pivots[i]` is
/// the leading column of `rows[i]`.
struct Echelon {
    std::vector<BitVector> rows;
    std::vector<std::size_t> pivots;
    std::size_t n_cols = 0;
};

Echelon reduce(const BitMatrix &m);

/// Reusable membership oracle for the row space of a matrix.
class RowSpace {
  public:
    explicit RowSpace(const BitMatrix &basis);

    [[nodiscard]] std::size_t dimension() const noexcept { return echelon_.rows.size(); }
    [[nodiscard]] std::size_t ambient() const noexcept { return echelon_.n_cols; }
    [[nodiscard]] bool contains(const BitVector &v) const;
    /// v reduced against the echelon basis; zero iff v is in the span.
    [[nodiscard]] BitVector residual(BitVector v) const;

  private:
    Echelon echelon_;
};

std::size_t rank(const BitMatrix &m);

bool in_span(const BitVector &v, const BitMatrix &basis);

/// Basis of {v : M v = 0}, one basis vector per row; n_cols - rank rows.
BitMatrix kernel(const BitMatrix &m);

/// True iff the two row spaces are equal.
bool same_span(const BitMatrix &a, const BitMatrix &b);

} // namespace summon::gf2
