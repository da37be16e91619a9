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
#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "summon/error.hpp"
#include "summon/gf2/bit_matrix.hpp"
#include "summon/gf2/bit_vector.hpp"
#include "summon/gf2/edge_index.hpp"

using namespace summon;
using gf2::BitMatrix;
using gf2::BitVector;

namespace {

BitVector from_mask(std::uint64_t m, std::size_t len) {
    BitVector v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v.set(i, (m >> i) & 1U);
    }
    return v;
}

} // namespace

TEST(BitVector, StringRoundTripAndWeight) {
    const auto v = BitVector::from_string("0110100");
    EXPECT_EQ(v.size(), 7U);
    EXPECT_EQ(v.weight(), 3U);
    EXPECT_EQ(v.to_string(), "0110100");
    EXPECT_EQ(v.support(), (std::vector<std::size_t>{1, 2, 4}));
    EXPECT_THROW(BitVector::from_string("01x"), InvalidParameter);
}

TEST(BitVector, WordBoundaries) {
    for (const std::size_t len : {63U, 64U, 65U, 127U, 128U, 200U}) {
        auto v = BitVector::ones(len);
        EXPECT_EQ(v.weight(), len);
        v.flip(len - 1);
        EXPECT_EQ(v.weight(), len - 1);
        EXPECT_FALSE(v.get(len - 1));
        EXPECT_THROW((void)v.get(len), DimensionMismatch);
    }
}

TEST(BitVector, DotRejectsLengthMismatch) {
    EXPECT_THROW(gf2::dot(BitVector(3), BitVector(4)), DimensionMismatch);
    EXPECT_TRUE(gf2::dot(BitVector::from_string("1101"), BitVector::from_string("1001")) == false);
    EXPECT_TRUE(gf2::dot(BitVector::from_string("1100"), BitVector::from_string("1000")));
}

TEST(BitMatrix, AppendRowChecksWidth) {
    BitMatrix m(4);
    EXPECT_THROW(m.append_row(BitVector(5)), DimensionMismatch);
}

TEST(BitMatrix, RankMatchesMaskOracle) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t cols = 1 + rng() % 40;
        const std::size_t rows = rng() % 12;
        std::vector<std::uint64_t> masks;
        BitMatrix m(cols);
        for (std::size_t r = 0; r < rows; ++r) {
            std::uint64_t x = rng() & ((std::uint64_t{1} << cols) - 1);
            if (rng() % 3 == 0 && !masks.empty()) {
                x = masks[rng() % masks.size()] ^ masks[rng() % masks.size()];
            }
            masks.push_back(x);
            m.append_row(from_mask(x, cols));
        }
        EXPECT_EQ(gf2::rank(m), static_cast<std::size_t>(oracle::rank(masks)));
    }
}

TEST(BitMatrix, KernelIsOrthogonalAndComplete) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t cols = 1 + rng() % 20;
        BitMatrix m(cols);
        for (std::size_t r = 0; r < rng() % 8; ++r) {
            m.append_row(from_mask(rng(), cols));
        }
        const BitMatrix k = gf2::kernel(m);
        EXPECT_EQ(gf2::rank(k), k.n_rows());
        EXPECT_EQ(k.n_rows() + gf2::rank(m), cols);
        for (const auto &v : k.rows()) {
            EXPECT_TRUE(m.multiply(v).is_zero());
        }
    }
}

TEST(BitMatrix, SpanMembershipByEnumeration) {
    const BitMatrix basis = BitMatrix::from_strings({"110000", "011000", "000111"});
    std::set<std::string> members;
    for (unsigned sel = 0; sel < 8; ++sel) {
        BitVector v(6);
        for (unsigned k = 0; k < 3; ++k) {
            if ((sel >> k) & 1U) {
                v ^= basis.row(k);
            }
        }
        members.insert(v.to_string());
    }
    for (std::uint64_t m = 0; m < 64; ++m) {
        const auto v = from_mask(m, 6);
        EXPECT_EQ(gf2::in_span(v, basis), members.count(v.to_string()) == 1) << v.to_string();
    }
}

TEST(BitMatrix, TransposeAndSelect) {
    const BitMatrix m = BitMatrix::from_strings({"101", "011"});
    EXPECT_EQ(m.transpose().to_strings(), (std::vector<std::string>{"10", "01", "11"}));
    const std::size_t cols[] = {2, 0};
    EXPECT_EQ(m.select_columns(cols).to_strings(), (std::vector<std::string>{"11", "10"}));
    EXPECT_TRUE(gf2::same_span(m, BitMatrix::from_strings({"110", "011"})));
}

TEST(EdgeIndex, MatchesEnumeratedOrder) {
    for (std::size_t n = 2; n <= 13; ++n) {
        const gf2::EdgeIndexMap map(n);
        const auto list = oracle::edges(static_cast<int>(n));
        ASSERT_EQ(map.edge_count(), list.size());
        for (std::size_t q = 0; q < list.size(); ++q) {
            const auto [i, j] = list[q];
            EXPECT_EQ(map.index(i, j), q);
            EXPECT_EQ(map.index(j, i), q);
            EXPECT_EQ(map.edge(q), std::make_pair(std::size_t(i), std::size_t(j)));
        }
    }
}

TEST(EdgeIndex, LabelsAndErrors) {
    const gf2::EdgeIndexMap map(4);
    EXPECT_EQ(map.label(0), "e_1_2");
    EXPECT_EQ(map.label(5), "e_3_4");
    EXPECT_THROW((void)map.index(2, 2), InvalidEdge);
    EXPECT_THROW((void)map.index(0, 2), InvalidEdge);
    EXPECT_THROW((void)map.index(1, 5), InvalidEdge);
    EXPECT_EQ(gf2::choose2(12), 66U);
}
