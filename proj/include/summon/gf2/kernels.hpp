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
#include <cstdint>

#include "summon/simd/isa.hpp"

namespace summon::gf2 {

using Word = std::uint64_t;

/// Packed-word primitives behind BitVector / BitMatrix. Every variant must
/// return bit-identical results to the scalar one.
struct Kernels {
    /// dst[i] ^= src[i]
    void (*xor_into)(Word *dst, const Word *src, std::size_t n_words);
    /// Population count of a[0..n).
    std::size_t (*popcount)(const Word *a, std::size_t n_words);
    /// Population count of (a & b).
    std::size_t (*and_popcount)(const Word *a, const Word *b, std::size_t n_words);
};

const Kernels &kernels(simd::Isa isa);

/// Table for `simd::active_isa()`.
const Kernels &kernels();

namespace detail {
extern const Kernels kScalarKernels;
#if defined(SUMMON_QEC_HAVE_AVX2)
extern const Kernels kAvx2Kernels;
#endif
} // namespace detail

} // namespace summon::gf2
