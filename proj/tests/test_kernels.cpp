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

#include <cstring>
#include <random>
#include <vector>

#include "summon/code/pauli.hpp"
#include "summon/gf2/kernels.hpp"
#include "summon/sim/kernels.hpp"
#include "summon/sim/state_vector.hpp"
#include "summon/simd/isa.hpp"

using namespace summon;
using simd::Isa;

namespace {

class KernelEquivalence : public ::testing::Test {
  protected:
    void SetUp() override {
        if (!simd::isa_available(Isa::kAvx2)) {
            GTEST_SKIP() << "AVX2 not available on this host or build";
        }
    }
};

std::vector<sim::Amplitude> random_amps(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> n;
    std::vector<sim::Amplitude> a(dim);
    for (auto &x : a) {
        x = {n(rng), n(rng)};
    }
    return a;
}

bool bit_identical(const std::vector<sim::Amplitude> &a, const std::vector<sim::Amplitude> &b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(sim::Amplitude)) == 0;
}

bool bit_identical(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

} // namespace

TEST(Isa, ScalarAlwaysAvailableAndForceable) {
    EXPECT_TRUE(simd::isa_available(Isa::kScalar));
    simd::force_isa(Isa::kScalar);
    EXPECT_EQ(simd::active_isa(), Isa::kScalar);
    simd::reset_isa();
    EXPECT_EQ(simd::isa_name(Isa::kScalar), "scalar");
}

TEST_F(KernelEquivalence, Gf2WordKernels) {
    const auto &s = gf2::kernels(Isa::kScalar);
    const auto &v = gf2::kernels(Isa::kAvx2);
    std::mt19937_64 rng(3);
    for (std::size_t n = 0; n <= 37; ++n) {
        std::vector<gf2::Word> a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = rng();
            b[i] = rng();
        }
        EXPECT_EQ(s.popcount(a.data(), n), v.popcount(a.data(), n));
        EXPECT_EQ(s.and_popcount(a.data(), b.data(), n), v.and_popcount(a.data(), b.data(), n));
        auto a1 = a;
        auto a2 = a;
        s.xor_into(a1.data(), b.data(), n);
        v.xor_into(a2.data(), b.data(), n);
        EXPECT_EQ(a1, a2);
    }
}

TEST_F(KernelEquivalence, StatevectorGateKernels) {
    const auto &s = sim::kernels(Isa::kScalar);
    const auto &v = sim::kernels(Isa::kAvx2);
    std::mt19937_64 rng(17);
    for (unsigned n = 1; n <= 9; ++n) {
        const std::size_t dim = std::size_t{1} << n;
        for (unsigned q = 0; q < n; ++q) {
            auto a = random_amps(dim, rng);
            auto b = a;
            s.hadamard(a.data(), dim, q);
            v.hadamard(b.data(), dim, q);
            EXPECT_TRUE(bit_identical(a, b)) << "hadamard n=" << n << " q=" << q;

            for (unsigned c = 0; c < n; ++c) {
                if (c == q) {
                    continue;
                }
                auto x = random_amps(dim, rng);
                auto y = x;
                s.controlled_flip(x.data(), dim, std::uint64_t{1} << c, q);
                v.controlled_flip(y.data(), dim, std::uint64_t{1} << c, q);
                EXPECT_TRUE(bit_identical(x, y)) << "cnot n=" << n << " c=" << c << " t=" << q;
            }
        }
        for (int trial = 0; trial < 8; ++trial) {
            const std::uint64_t mask = rng() & (dim - 1);
            auto a = random_amps(dim, rng);
            auto b = a;
            s.phase_flip(a.data(), dim, mask);
            v.phase_flip(b.data(), dim, mask);
            EXPECT_TRUE(bit_identical(a, b));
            EXPECT_TRUE(bit_identical(s.norm_sq(a.data(), dim), v.norm_sq(a.data(), dim)));
            EXPECT_TRUE(bit_identical(s.parity_expectation(a.data(), dim, mask),
                                      v.parity_expectation(a.data(), dim, mask)));
            for (unsigned parity = 0; parity < 2; ++parity) {
                auto x = a;
                auto y = a;
                s.parity_project(x.data(), dim, mask, parity, 1.25);
                v.parity_project(y.data(), dim, mask, parity, 1.25);
                EXPECT_TRUE(bit_identical(x, y));
            }
        }
    }
}

TEST_F(KernelEquivalence, DispatchedSimulationMatchesScalar) {
    // Same gate sequence under both ISAs must leave identical amplitudes.
    auto run = [](Isa isa) {
        simd::force_isa(isa);
        sim::StateVector s(7);
        for (std::size_t q = 0; q < 7; ++q) {
            s.h(q);
        }
        for (std::size_t q = 0; q + 1 < 7; ++q) {
            s.cnot(q, q + 1);
            s.cz(q, (q + 3) % 7);
        }
        s.project(code::PauliOperator::from_string("ZIZIIZI"), 1);
        s.apply_pauli(code::PauliOperator::from_string("XYZIXYZ"));
        simd::reset_isa();
        return std::vector<sim::Amplitude>(s.amplitudes().begin(), s.amplitudes().end());
    };
    EXPECT_TRUE(bit_identical(run(Isa::kScalar), run(Isa::kAvx2)));
}
