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
#include "summon/gf2/bit_matrix.hpp"

#include <algorithm>
#include <utility>

#include "summon/error.hpp"

namespace summon::gf2 {

BitMatrix::BitMatrix(std::vector<BitVector> rows)
    : n_cols_(rows.empty() ? 0 : rows.front().size()) {
    rows_.reserve(rows.size());
    for (auto &r : rows) {
        append_row(std::move(r));
    }
}

BitMatrix::BitMatrix(std::size_t n_cols, std::vector<BitVector> rows) : n_cols_(n_cols) {
    rows_.reserve(rows.size());
    for (auto &r : rows) {
        append_row(std::move(r));
    }
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        BitVector r(n);
        r.set(i);
        m.append_row(std::move(r));
    }
    return m;
}

BitMatrix BitMatrix::from_strings(std::initializer_list<const char *> rows) {
    std::vector<BitVector> parsed;
    for (const char *r : rows) {
        parsed.push_back(BitVector::from_string(r));
    }
    return BitMatrix(std::move(parsed));
}

void BitMatrix::append_row(BitVector row) {
    if (row.size() != n_cols_) {
        throw DimensionMismatch("row of length " + std::to_string(row.size()) +
                                " appended to matrix with " + std::to_string(n_cols_) +
                                " columns");
    }
    rows_.push_back(std::move(row));
}

BitVector BitMatrix::multiply(const BitVector &v) const {
    BitVector out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (dot(rows_[i], v)) {
            out.set(i);
        }
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(rows_.size());
    for (std::size_t c = 0; c < n_cols_; ++c) {
        BitVector col(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (rows_[r].get(c)) {
                col.set(r);
            }
        }
        t.append_row(std::move(col));
    }
    return t;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
    BitMatrix out(cols.size());
    for (const auto &r : rows_) {
        BitVector picked(cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            if (r.get(cols[k])) {
                picked.set(k);
            }
        }
        out.append_row(std::move(picked));
    }
    return out;
}

std::vector<std::string> BitMatrix::to_strings() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto &r : rows_) {
        out.push_back(r.to_string());
    }
    return out;
}

Echelon reduce(const BitMatrix &m) {
    Echelon e;
    e.n_cols = m.n_cols();
    std::vector<BitVector> rows = m.rows();
    std::size_t next = 0;
    for (std::size_t col = 0; col < m.n_cols() && next < rows.size(); ++col) {
        std::size_t pivot = next;
        while (pivot < rows.size() && !rows[pivot].get(col)) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != next && rows[i].get(col)) {
                rows[i] ^= rows[next];
            }
        }
        e.pivots.push_back(col);
        ++next;
    }
    rows.resize(next);
    e.rows = std::move(rows);
    return e;
}

RowSpace::RowSpace(const BitMatrix &basis) : echelon_(reduce(basis)) {}

BitVector RowSpace::residual(BitVector v) const {
    if (v.size() != echelon_.n_cols) {
        throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                                " does not match basis width " + std::to_string(echelon_.n_cols));
    }
    for (std::size_t i = 0; i < echelon_.rows.size(); ++i) {
        if (v.get(echelon_.pivots[i])) {
            v ^= echelon_.rows[i];
        }
    }
    return v;
}

bool RowSpace::contains(const BitVector &v) const { return residual(v).is_zero(); }

std::size_t rank(const BitMatrix &m) { return reduce(m).rows.size(); }

bool in_span(const BitVector &v, const BitMatrix &basis) { return RowSpace(basis).contains(v); }

BitMatrix kernel(const BitMatrix &m) {
    const Echelon e = reduce(m);
    std::vector<bool> is_pivot(m.n_cols(), false);
    for (const std::size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    BitMatrix out(m.n_cols());
    for (std::size_t free_col = 0; free_col < m.n_cols(); ++free_col) {
        if (is_pivot[free_col]) {
            continue;
        }
        BitVector v(m.n_cols());
        v.set(free_col);
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            if (e.rows[i].get(free_col)) {
                v.set(e.pivots[i]);
            }
        }
        out.append_row(std::move(v));
    }
    return out;
}

bool same_span(const BitMatrix &a, const BitMatrix &b) {
    if (a.n_cols() != b.n_cols()) {
        return false;
    }
    const RowSpace sa(a);
    const RowSpace sb(b);
    return sa.dimension() == sb.dimension() &&
           std::all_of(b.rows().begin(), b.rows().end(),
                       [&](const BitVector &v) { return sa.contains(v); });
}

} // namespace summon::gf2
