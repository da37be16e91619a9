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

#include <bit>

#include "summon/sim/kernels.hpp"

namespace summon::sim::detail {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

inline double *as_doubles(Amplitude *a) { return reinterpret_cast<double *>(a); }
inline const double *as_doubles(const Amplitude *a) { return reinterpret_cast<const double *>(a); }

inline bool odd_parity(std::uint64_t i, std::uint64_t mask) {
    return (std::popcount(i & mask) & 1) != 0;
}

// Sign-bit mask for the amplitude pair (i, i+1): lanes [i.re, i.im, i+1.re, i+1.im].
inline __m256d pair_mask(bool first, bool second, std::int64_t bits) {
    const std::int64_t a = first ? bits : 0;
    const std::int64_t b = second ? bits : 0;
    return _mm256_castsi256_pd(_mm256_set_epi64x(b, b, a, a));
}

inline double combine_lanes(__m256d acc) {
    // (l0 + l1) + (l2 + l3)
    const __m256d pair_sums = _mm256_hadd_pd(acc, acc);
    const __m128d lo = _mm256_castpd256_pd128(pair_sums);
    const __m128d hi = _mm256_extractf128_pd(pair_sums, 1);
    return _mm_cvtsd_f64(_mm_add_sd(lo, hi));
}

void hadamard_avx2(Amplitude *a, std::size_t dim, unsigned qubit) {
    const __m256d s = _mm256_set1_pd(kInvSqrt2);
    double *d = as_doubles(a);
    if (dim < 2) {
        return;
    }
    if (qubit == 0) {
        for (std::size_t i = 0; i < dim; i += 2) {
            const __m256d v = _mm256_loadu_pd(d + 2 * i);
            const __m256d swapped = _mm256_permute2f128_pd(v, v, 0x01);
            const __m256d sum = _mm256_add_pd(v, swapped);
            const __m256d diff = _mm256_sub_pd(v, swapped);
            const __m256d out = _mm256_permute2f128_pd(sum, diff, 0x20);
            _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(out, s));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << qubit;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            double *lo = d + 2 * i;
            double *hi = d + 2 * (i + stride);
            const __m256d vl = _mm256_loadu_pd(lo);
            const __m256d vh = _mm256_loadu_pd(hi);
            _mm256_storeu_pd(lo, _mm256_mul_pd(_mm256_add_pd(vl, vh), s));
            _mm256_storeu_pd(hi, _mm256_mul_pd(_mm256_sub_pd(vl, vh), s));
        }
    }
}

void controlled_flip_avx2(Amplitude *a, std::size_t dim, std::uint64_t ctrl_mask,
                          unsigned target) {
    // Pairs (i, i+1) share every bit but bit 0, so the vector path needs the
    // target and all controls above bit 0.
    if (target == 0 || (ctrl_mask & 1U) != 0 || dim < 4) {
        controlled_flip_scalar(a, dim, ctrl_mask, target);
        return;
    }
    const std::size_t stride = std::size_t{1} << target;
    double *d = as_doubles(a);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            if ((i & ctrl_mask) != ctrl_mask) {
                continue;
            }
            const __m256d vl = _mm256_loadu_pd(d + 2 * i);
            const __m256d vh = _mm256_loadu_pd(d + 2 * (i + stride));
            _mm256_storeu_pd(d + 2 * i, vh);
            _mm256_storeu_pd(d + 2 * (i + stride), vl);
        }
    }
}

void phase_flip_avx2(Amplitude *a, std::size_t dim, std::uint64_t mask) {
    constexpr std::int64_t kSign = std::int64_t{1} << 63;
    double *d = as_doubles(a);
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        const __m256d flip = pair_mask((i & mask) == mask, ((i + 1) & mask) == mask, kSign);
        _mm256_storeu_pd(d + 2 * i, _mm256_xor_pd(_mm256_loadu_pd(d + 2 * i), flip));
    }
    if (i < dim && (i & mask) == mask) {
        d[2 * i] = -d[2 * i];
        d[2 * i + 1] = -d[2 * i + 1];
    }
}

double norm_sq_avx2(const Amplitude *a, std::size_t dim) {
    const double *d = as_doubles(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        const __m256d v = _mm256_loadu_pd(d + 2 * i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double total = combine_lanes(acc);
    if (i < dim) {
        total = total + (d[2 * i] * d[2 * i] + d[2 * i + 1] * d[2 * i + 1]);
    }
    return total;
}

double parity_expectation_avx2(const Amplitude *a, std::size_t dim, std::uint64_t z_mask) {
    constexpr std::int64_t kSign = std::int64_t{1} << 63;
    const double *d = as_doubles(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        const __m256d v = _mm256_loadu_pd(d + 2 * i);
        const __m256d sign = pair_mask(odd_parity(i, z_mask), odd_parity(i + 1, z_mask), kSign);
        acc = _mm256_add_pd(acc, _mm256_xor_pd(_mm256_mul_pd(v, v), sign));
    }
    double total = combine_lanes(acc);
    if (i < dim) {
        double tail = d[2 * i] * d[2 * i] + d[2 * i + 1] * d[2 * i + 1];
        if (odd_parity(i, z_mask)) {
            tail = -tail;
        }
        total = total + tail;
    }
    return total;
}

void parity_project_avx2(Amplitude *a, std::size_t dim, std::uint64_t z_mask, unsigned parity,
                         double scale) {
    const __m256d s = _mm256_set1_pd(scale);
    double *d = as_doubles(a);
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        const bool keep0 = static_cast<unsigned>(odd_parity(i, z_mask)) == parity;
        const bool keep1 = static_cast<unsigned>(odd_parity(i + 1, z_mask)) == parity;
        const __m256d keep = pair_mask(keep0, keep1, -1);
        const __m256d v = _mm256_mul_pd(_mm256_loadu_pd(d + 2 * i), s);
        _mm256_storeu_pd(d + 2 * i, _mm256_and_pd(v, keep));
    }
    if (i < dim) {
        if (static_cast<unsigned>(odd_parity(i, z_mask)) == parity) {
            d[2 * i] = d[2 * i] * scale;
            d[2 * i + 1] = d[2 * i + 1] * scale;
        } else {
            d[2 * i] = 0.0;
            d[2 * i + 1] = 0.0;
        }
    }
}

} // namespace

const Kernels kAvx2Kernels{
    &hadamard_avx2,       &controlled_flip_avx2,     &phase_flip_avx2,
    &norm_sq_avx2,        &parity_expectation_avx2,  &parity_project_avx2,
    &apply_pauli_scalar,  &pauli_expectation_scalar,
};

} // namespace summon::sim::detail
