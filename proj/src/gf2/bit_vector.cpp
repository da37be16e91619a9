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
#include "summon/gf2/bit_vector.hpp"

#include <algorithm>
#include <bit>

#include "summon/error.hpp"

namespace summon::gf2 {
namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t len) { return (len + kWordBits - 1) / kWordBits; }

void require_same_size(const BitVector &a, const BitVector &b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("bit vector lengths differ: " + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
    }
}

} // namespace

BitVector::BitVector(std::size_t len) : len_(len), words_(words_for(len), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw InvalidParameter("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

BitVector BitVector::from_indices(std::size_t len, std::span<const std::size_t> ones) {
    BitVector v(len);
    for (const std::size_t i : ones) {
        v.set(i);
    }
    return v;
}

BitVector BitVector::ones(std::size_t len) {
    BitVector v(len);
    std::fill(v.words_.begin(), v.words_.end(), ~Word{0});
    if (const std::size_t tail = len % kWordBits; tail != 0) {
        v.words_.back() = (Word{1} << tail) - 1;
    }
    return v;
}

void BitVector::check_index(std::size_t i) const {
    if (i >= len_) {
        throw DimensionMismatch("bit index " + std::to_string(i) + " out of range for length " +
                                std::to_string(len_));
    }
}

bool BitVector::get(std::size_t i) const {
    check_index(i);
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVector::set(std::size_t i, bool value) {
    check_index(i);
    const Word mask = Word{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

void BitVector::flip(std::size_t i) {
    check_index(i);
    words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

std::size_t BitVector::weight() const { return kernels().popcount(words_.data(), words_.size()); }

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<std::size_t> BitVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        Word bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string BitVector::to_string() const {
    std::string s(len_, '0');
    for (const std::size_t i : support()) {
        s[i] = '1';
    }
    return s;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    require_same_size(*this, other);
    kernels().xor_into(words_.data(), other.words_.data(), words_.size());
    return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
    require_same_size(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        words_[i] &= other.words_[i];
    }
    return *this;
}

bool dot(const BitVector &u, const BitVector &v) {
    require_same_size(u, v);
    const auto a = u.words();
    return (kernels().and_popcount(a.data(), v.words().data(), a.size()) & 1U) != 0;
}

} // namespace summon::gf2
