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
#include <immintrin.h>

#include "summon/gf2/kernels.hpp"

namespace summon::gf2::detail {
namespace {

constexpr std::size_t kWordsPerVec = 4;

void xor_into_avx2(Word *dst, const Word *src, std::size_t n_words) {
    std::size_t i = 0;
    for (; i + kWordsPerVec <= n_words; i += kWordsPerVec) {
        auto *d = reinterpret_cast<__m256i *>(dst + i);
        const auto *s = reinterpret_cast<const __m256i *>(src + i);
        _mm256_storeu_si256(d, _mm256_xor_si256(_mm256_loadu_si256(d), _mm256_loadu_si256(s)));
    }
    for (; i < n_words; ++i) {
        dst[i] ^= src[i];
    }
}

// Nibble-table popcount (Mula): 4 bits -> count via vpshufb, bytes summed with vpsadbw.
inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2,
                                         1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    const __m256i lo = _mm256_and_si256(v, low_mask);
    const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::size_t horizontal_sum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i *>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

std::size_t popcount_avx2(const Word *a, std::size_t n_words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kWordsPerVec <= n_words; i += kWordsPerVec) {
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(popcount_bytes(v), _mm256_setzero_si256()));
    }
    std::size_t total = horizontal_sum(acc);
    for (; i < n_words; ++i) {
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
    }
    return total;
}

std::size_t and_popcount_avx2(const Word *a, const Word *b, std::size_t n_words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + kWordsPerVec <= n_words; i += kWordsPerVec) {
        const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(a + i));
        const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i *>(b + i));
        const __m256i bytes = popcount_bytes(_mm256_and_si256(va, vb));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
    }
    std::size_t total = horizontal_sum(acc);
    for (; i < n_words; ++i) {
        total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
    }
    return total;
}

} // namespace

const Kernels kAvx2Kernels{&xor_into_avx2, &popcount_avx2, &and_popcount_avx2};

} // namespace summon::gf2::detail
