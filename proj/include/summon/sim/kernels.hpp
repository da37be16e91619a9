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

#include <complex>
#include <cstddef>
#include <cstdint>

#include "summon/simd/isa.hpp"

namespace summon::sim {

using Amplitude = std::complex<double>;

/// Dense statevector primitives. Amplitude index bit q is qubit q.
///
/// Every variant produces bit-identical output. Reductions follow one fixed
/// order: the interleaved (re, im) double stream is split into four lanes by
/// position mod 4, each lane is summed front to back, and the lanes are
/// combined as (l0 + l1) + (l2 + l3); a trailing odd amplitude is added last.
struct Kernels {
    void (*hadamard)(Amplitude *a, std::size_t dim, unsigned qubit);
    /// Swap a[i] and a[i | 1<<target] wherever (i & ctrl_mask) == ctrl_mask.
    /// ctrl_mask == 0 gives X; must not contain the target bit.
    void (*controlled_flip)(Amplitude *a, std::size_t dim, std::uint64_t ctrl_mask,
                            unsigned target);
    /// Negate a[i] wherever (i & mask) == mask (Z for one bit, CZ for two).
    void (*phase_flip)(Amplitude *a, std::size_t dim, std::uint64_t mask);
    double (*norm_sq)(const Amplitude *a, std::size_t dim);
    /// Σ |a_i|² (-1)^{popcount(i & z_mask)}.
    double (*parity_expectation)(const Amplitude *a, std::size_t dim, std::uint64_t z_mask);
    /// a_i *= scale where popcount(i & z_mask) has the given parity, else 0.
    void (*parity_project)(Amplitude *a, std::size_t dim, std::uint64_t z_mask, unsigned parity,
                           double scale);
    /// out = P in, P = i^{n_y} X^{x_mask} Z^{z_mask} (a Hermitian Pauli).
    void (*apply_pauli)(Amplitude *out, const Amplitude *in, std::size_t dim,
                        std::uint64_t x_mask, std::uint64_t z_mask, unsigned n_y);
    /// ⟨in| P |in⟩ for the same P.
    Amplitude (*pauli_expectation)(const Amplitude *in, std::size_t dim, std::uint64_t x_mask,
                                   std::uint64_t z_mask, unsigned n_y);
};

const Kernels &kernels(simd::Isa isa);
const Kernels &kernels();

namespace detail {
extern const Kernels kScalarKernels;
#if defined(SUMMON_QEC_HAVE_AVX2)
extern const Kernels kAvx2Kernels;
#endif

void controlled_flip_scalar(Amplitude *a, std::size_t dim, std::uint64_t ctrl_mask,
                            unsigned target);
void apply_pauli_scalar(Amplitude *out, const Amplitude *in, std::size_t dim,
                        std::uint64_t x_mask, std::uint64_t z_mask, unsigned n_y);
Amplitude pauli_expectation_scalar(const Amplitude *in, std::size_t dim, std::uint64_t x_mask,
                                   std::uint64_t z_mask, unsigned n_y);
} // namespace detail

} // namespace summon::sim
