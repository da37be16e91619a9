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
#include <bit>

#include "summon/gf2/kernels.hpp"

namespace summon::gf2::detail {
namespace {

void xor_into_scalar(Word *dst, const Word *src, std::size_t n_words) {
    for (std::size_t i = 0; i < n_words; ++i) {
        dst[i] ^= src[i];
    }
}

std::size_t popcount_scalar(const Word *a, std::size_t n_words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n_words; ++i) {
        total += static_cast<std::size_t>(std::popcount(a[i]));
    }
    return total;
}

std::size_t and_popcount_scalar(const Word *a, const Word *b, std::size_t n_words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < n_words; ++i) {
        total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    }
    return total;
}

} // namespace

const Kernels kScalarKernels{&xor_into_scalar, &popcount_scalar, &and_popcount_scalar};

} // namespace summon::gf2::detail
