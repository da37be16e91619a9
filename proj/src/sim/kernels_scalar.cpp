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
#include <cmath>

#include "summon/sim/kernels.hpp"

namespace summon::sim::detail {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

inline bool odd_parity(std::uint64_t i, std::uint64_t mask) {
    return (std::popcount(i & mask) & 1) != 0;
}

inline double *as_doubles(Amplitude *a) { return reinterpret_cast<double *>(a); }
inline const double *as_doubles(const Amplitude *a) { return reinterpret_cast<const double *>(a); }

void hadamard_scalar(Amplitude *a, std::size_t dim, unsigned qubit) {
    const std::size_t stride = std::size_t{1} << qubit;
    double *d = as_doubles(a);
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            double *lo = d + 2 * i;
            double *hi = d + 2 * (i + stride);
            const double lr = lo[0];
            const double li = lo[1];
            const double hr = hi[0];
            const double hi_im = hi[1];
            lo[0] = (lr + hr) * kInvSqrt2;
            lo[1] = (li + hi_im) * kInvSqrt2;
            hi[0] = (lr - hr) * kInvSqrt2;
            hi[1] = (li - hi_im) * kInvSqrt2;
        }
    }
}

void phase_flip_scalar(Amplitude *a, std::size_t dim, std::uint64_t mask) {
    double *d = as_doubles(a);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & mask) == mask) {
            d[2 * i] = -d[2 * i];
            d[2 * i + 1] = -d[2 * i + 1];
        }
    }
}

// Lane-ordered accumulation shared by the reductions; see Kernels.
struct Lanes {
    double l[4] = {0.0, 0.0, 0.0, 0.0};

    [[nodiscard]] double combine() const { return (l[0] + l[1]) + (l[2] + l[3]); }
};

double norm_sq_scalar(const Amplitude *a, std::size_t dim) {
    const double *d = as_doubles(a);
    Lanes lanes;
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        for (int k = 0; k < 4; ++k) {
            const double v = d[2 * i + k];
            lanes.l[k] = lanes.l[k] + v * v;
        }
    }
    double total = lanes.combine();
    if (i < dim) {
        total = total + (d[2 * i] * d[2 * i] + d[2 * i + 1] * d[2 * i + 1]);
    }
    return total;
}

double parity_expectation_scalar(const Amplitude *a, std::size_t dim, std::uint64_t z_mask) {
    const double *d = as_doubles(a);
    Lanes lanes;
    std::size_t i = 0;
    for (; i + 2 <= dim; i += 2) {
        for (int k = 0; k < 4; ++k) {
            const double v = d[2 * i + k];
            double sq = v * v;
            if (odd_parity(i + static_cast<std::size_t>(k / 2), z_mask)) {
                sq = -sq;
            }
            lanes.l[k] = lanes.l[k] + sq;
        }
    }
    double total = lanes.combine();
    if (i < dim) {
        double tail = d[2 * i] * d[2 * i] + d[2 * i + 1] * d[2 * i + 1];
        if (odd_parity(i, z_mask)) {
            tail = -tail;
        }
        total = total + tail;
    }
    return total;
}

void parity_project_scalar(Amplitude *a, std::size_t dim, std::uint64_t z_mask, unsigned parity,
                           double scale) {
    double *d = as_doubles(a);
    for (std::size_t i = 0; i < dim; ++i) {
        if (static_cast<unsigned>(odd_parity(i, z_mask)) == parity) {
            d[2 * i] = d[2 * i] * scale;
            d[2 * i + 1] = d[2 * i + 1] * scale;
        } else {
            d[2 * i] = 0.0;
            d[2 * i + 1] = 0.0;
        }
    }
}

// Multiply by i^k exactly (component swaps and negations only).
inline Amplitude times_i_power(Amplitude v, unsigned k) {
    switch (k & 3U) {
    case 0:
        return v;
    case 1:
        return {-v.imag(), v.real()};
    case 2:
        return {-v.real(), -v.imag()};
    default:
        return {v.imag(), -v.real()};
    }
}

} // namespace

void controlled_flip_scalar(Amplitude *a, std::size_t dim, std::uint64_t ctrl_mask,
                            unsigned target) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            if ((i & ctrl_mask) == ctrl_mask) {
                std::swap(a[i], a[i + stride]);
            }
        }
    }
}

void apply_pauli_scalar(Amplitude *out, const Amplitude *in, std::size_t dim,
                        std::uint64_t x_mask, std::uint64_t z_mask, unsigned n_y) {
    // Z acts first, then X: (P in)[i ^ x] = i^{n_y} (-1)^{|i & z|} in[i].
    for (std::size_t i = 0; i < dim; ++i) {
        const unsigned k = n_y + (odd_parity(i, z_mask) ? 2U : 0U);
        out[i ^ x_mask] = times_i_power(in[i], k);
    }
}

Amplitude pauli_expectation_scalar(const Amplitude *in, std::size_t dim, std::uint64_t x_mask,
                                   std::uint64_t z_mask, unsigned n_y) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        const unsigned k = n_y + (odd_parity(i, z_mask) ? 2U : 0U);
        const Amplitude term = std::conj(in[i ^ x_mask]) * times_i_power(in[i], k);
        re += term.real();
        im += term.imag();
    }
    return {re, im};
}

const Kernels kScalarKernels{
    &hadamard_scalar,       &controlled_flip_scalar, &phase_flip_scalar,
    &norm_sq_scalar,        &parity_expectation_scalar, &parity_project_scalar,
    &apply_pauli_scalar,    &pauli_expectation_scalar,
};

} // namespace summon::sim::detail
