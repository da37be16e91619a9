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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "summon/gf2/kernels.hpp"

namespace summon::gf2 {

/// Fixed-length vector over GF(2), packed 64 bits per word. Bits past
/// `size()` in the last word are always zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t len);

    /// Parse a string of '0'/'1' characters; position 0 is the first char.
    static BitVector from_string(std::string_view bits);
    /// Vector of length `len` with ones at the listed positions.
    static BitVector from_indices(std::size_t len, std::span<const std::size_t> ones);
    static BitVector ones(std::size_t len);

    [[nodiscard]] std::size_t size() const noexcept { return len_; }
    [[nodiscard]] bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    [[nodiscard]] std::size_t weight() const;
    [[nodiscard]] bool is_zero() const;
    /// Positions of the one bits, ascending.
    [[nodiscard]] std::vector<std::size_t> support() const;
    [[nodiscard]] std::string to_string() const;

    BitVector &operator^=(const BitVector &other);
    BitVector &operator&=(const BitVector &other);
    friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }
    friend bool operator==(const BitVector &, const BitVector &) = default;

    [[nodiscard]] std::span<const Word> words() const noexcept { return words_; }
    [[nodiscard]] std::span<Word> words() noexcept { return words_; }

  private:
    void check_index(std::size_t i) const;

    std::size_t len_ = 0;
    std::vector<Word> words_;
};

/// Indefinite inner product: parity of the AND of the two bit sequences.
bool dot(const BitVector &u, const BitVector &v);

} // namespace summon::gf2
