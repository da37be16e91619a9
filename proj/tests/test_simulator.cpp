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

#include <bit>
#include <cmath>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "summon/circuits/synth.hpp"
#include "summon/code/stabilizer_code.hpp"
#include "summon/error.hpp"
#include "summon/protocol/summon.hpp"
#include "summon/sim/density_matrix.hpp"
#include "summon/sim/rng.hpp"
#include "summon/sim/simulate.hpp"
#include "summon/sim/state_vector.hpp"

using namespace summon;
using code::PauliOperator;
using sim::Amplitude;
using sim::StateVector;

namespace {

constexpr double kTight = 1e-12;

/// α|C2⟩ + β|A_1 + C2⟩ summed by hand over the X-row span, normalized.
StateVector logical_state(const code::StabilizerCode &c, Amplitude alpha, Amplitude beta) {
    const auto elements = sim::enumerate_c2(c);
    std::vector<Amplitude> amps(std::size_t{1} << c.n_qubits());
    const double w = 1.0 / std::sqrt(static_cast<double>(elements.size()));
    const auto a1 = c.logical_x().x_part();
    for (const auto &x : elements) {
        std::size_t i0 = 0;
        std::size_t i1 = 0;
        const auto shifted = x ^ a1;
        for (std::size_t q = 0; q < c.n_qubits(); ++q) {
            i0 |= std::size_t(x.get(q)) << q;
            i1 |= std::size_t(shifted.get(q)) << q;
        }
        amps[i0] += alpha * w;
        amps[i1] += beta * w;
    }
    return StateVector::from_amplitudes(std::move(amps));
}

double overlap(const StateVector &a, const StateVector &b) { return std::abs(a.inner(b)); }

} // namespace

TEST(StateVector, HadamardTwiceIsIdentity) {
    StateVector s(1);
    s.h(0);
    s.h(0);
    EXPECT_NEAR(std::abs(s.amplitude(0) - 1.0), 0.0, kTight);
    EXPECT_NEAR(std::abs(s.amplitude(1)), 0.0, kTight);
}

TEST(StateVector, GatesMatchIndexOracle) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> nd;
    std::vector<Amplitude> amps(32);
    for (auto &a : amps) {
        a = {nd(rng), nd(rng)};
    }
    auto ref = amps;
    StateVector s = StateVector::from_amplitudes(amps);
    s.h(3);
    oracle::apply_h(ref, 3);
    s.cnot(3, 0);
    oracle::apply_cnot(ref, 3, 0);
    s.cnot(1, 4);
    oracle::apply_cnot(ref, 1, 4);
    for (std::size_t i = 0; i < ref.size(); ++i) {
        EXPECT_NEAR(std::abs(s.amplitude(i) - ref[i]), 0.0, kTight);
    }
}

TEST(StateVector, UnitaryGatesPreserveNorm) {
    auto [a, b] = sim::random_qubit_state(4);
    StateVector s = StateVector::with_qubit(8, 2, a, b);
    for (std::size_t q = 0; q < 8; ++q) {
        s.h(q);
        s.cnot(q, (q + 1) % 8);
        s.cz(q, (q + 5) % 8);
        s.x(q);
        s.z((q + 2) % 8);
    }
    EXPECT_NEAR(s.norm_sq(), 1.0, kTight);
}

TEST(StateVector, ExpectationBasics) {
    StateVector zero(1);
    EXPECT_NEAR(zero.expectation(PauliOperator::from_string("Z")), 1.0, kTight);
    EXPECT_NEAR(zero.expectation(PauliOperator::from_string("X")), 0.0, kTight);
    StateVector plus(1);
    plus.h(0);
    EXPECT_NEAR(plus.expectation(PauliOperator::from_string("X")), 1.0, kTight);
    StateVector y(1);
    y.h(0);
    y.apply_pauli(PauliOperator::from_string("Z"));
    EXPECT_NEAR(y.expectation(PauliOperator::from_string("X")), -1.0, kTight);
    EXPECT_THROW((void)zero.expectation(PauliOperator::from_string("ZZ")), DimensionMismatch);
}

TEST(StateVector, ProjectionRenormalizesAndRejectsImpossibleBranch) {
    StateVector bell(2);
    bell.h(0);
    bell.cnot(0, 1);
    auto s = bell;
    s.project(PauliOperator::from_string("ZI"), 1);
    EXPECT_NEAR(s.norm_sq(), 1.0, kTight);
    EXPECT_NEAR(std::abs(s.amplitude(3)), 1.0, kTight);
    EXPECT_THROW(bell.project(PauliOperator::from_string("ZZ"), 1), CorruptedState);
}

TEST(StateVector, DumpRoundTrip) {
    auto [a, b] = sim::random_qubit_state(12);
    StateVector s = StateVector::with_qubit(3, 1, a, b);
    s.h(2);
    std::stringstream buf;
    sim::write_state_dump(buf, s);
    EXPECT_EQ(buf.str().size(), 4U + 8U * 16U);
    EXPECT_EQ(static_cast<unsigned char>(buf.str()[0]), 3U);
    EXPECT_EQ(sim::read_state_dump(buf), s);
}

TEST(Rng, DeterministicAndInRange) {
    sim::CounterRng a(42);
    sim::CounterRng b(42);
    for (int i = 0; i < 1000; ++i) {
        const double u = a.next_unit();
        EXPECT_EQ(u, b.next_unit());
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
    }
    const auto [x, y] = sim::random_qubit_state(99);
    EXPECT_NEAR(std::norm(x) + std::norm(y), 1.0, kTight);
    EXPECT_EQ(sim::random_qubit_state(99), sim::random_qubit_state(99));
    EXPECT_NE(sim::random_qubit_state(99), sim::random_qubit_state(100));
}

TEST(Rng, KnownFirstDraw) {
    // SplitMix64 reference value: state 0 advanced once by the golden gamma.
    sim::CounterRng r(0);
    EXPECT_EQ(r.next_u64(), 0xE220A8397B1DCDAFULL);
}

TEST(PartialTrace, ProductAndBell) {
    StateVector s(2);
    s.h(1);
    const std::uint32_t keep0[] = {0};
    const auto rho = sim::partial_trace(s, keep0);
    EXPECT_NEAR(std::abs(rho.at(0, 0) - 1.0), 0.0, kTight);
    EXPECT_NEAR(std::abs(rho.at(1, 1)), 0.0, kTight);

    StateVector bell(2);
    bell.h(0);
    bell.cnot(0, 1);
    const auto half = sim::partial_trace(bell, keep0);
    EXPECT_NEAR(half.at(0, 0).real(), 0.5, kTight);
    EXPECT_NEAR(half.at(1, 1).real(), 0.5, kTight);
    EXPECT_NEAR(std::abs(half.at(0, 1)), 0.0, kTight);
    const auto [a, b] = sim::random_qubit_state(5);
    EXPECT_NEAR(sim::fidelity_qubit(half, StateVector::from_amplitudes({a, b})), 0.5, kTight);
    const std::uint32_t bad[] = {2};
    EXPECT_THROW(sim::partial_trace(bell, bad), DimensionMismatch);
}

TEST(PartialTrace, ProductStateFactorizes) {
    const auto [a, b] = sim::random_qubit_state(21);
    const auto [c, d] = sim::random_qubit_state(22);
    const auto s = StateVector::from_amplitudes({a * c, b * c, a * d, b * d});
    const std::uint32_t keep[] = {0};
    const auto rho = sim::partial_trace(s, keep);
    EXPECT_NEAR(std::abs(rho.at(0, 1) - a * std::conj(b)), 0.0, kTight);
    EXPECT_NEAR(sim::fidelity_qubit(rho, StateVector::from_amplitudes({a, b})), 1.0, kTight);
}

TEST(DensityMatrix, PhysicalInvariants) {
    const auto code = code::build_css(4);
    const auto [a, b] = sim::random_qubit_state(31);
    const auto enc = protocol::encode_qubit(code, a, b);
    const std::uint32_t keep[] = {2, 4, 5};
    const auto rho = sim::partial_trace(enc, keep);
    EXPECT_TRUE(rho.is_hermitian(kTight));
    EXPECT_NEAR(std::abs(rho.trace() - 1.0), 0.0, kTight);
    EXPECT_GE(rho.min_eigenvalue(), -1e-10);
}

TEST(Simulate, GraphStateOfTriangle) {
    auto run = sim::apply_circuit(StateVector(3), circuits::synth_graph_state(complete_graph(3)), 0);
    for (const char *g : {"XZZ", "ZXZ", "ZZX"}) {
        EXPECT_NEAR(run.state.expectation(PauliOperator::from_string(g)), 1.0, kTight) << g;
    }
}

TEST(Simulate, DeterministicForSeed) {
    const auto code = code::build_css(4);
    const auto enc = protocol::encode_qubit(code, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
    const auto dec = circuits::synth_decoder(code, 2);
    const auto a = sim::apply_circuit(enc, dec, 77);
    const auto b = sim::apply_circuit(enc, dec, 77);
    EXPECT_EQ(a.record, b.record);
    EXPECT_EQ(a.state, b.state);
    for (const double p : a.record.probabilities) {
        EXPECT_GE(p, 0.0);
        EXPECT_LE(p, 1.0);
    }
    EXPECT_THROW(sim::apply_circuit(StateVector(5), dec, 0), DimensionMismatch);
}

TEST(Encoder, StabilizedAndLogicalOnRandomInputs) {
    for (const std::size_t n : {4, 6}) {
        const auto code = code::build_css(n);
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto [a, b] = sim::random_qubit_state(seed);
            const auto enc = protocol::encode_qubit(code, a, b);
            for (const auto &g : code.generators()) {
                EXPECT_NEAR(enc.expectation(g), 1.0, 1e-10);
            }
            EXPECT_NEAR(enc.expectation(code.logical_z()), std::norm(a) - std::norm(b), 1e-10);
            EXPECT_NEAR(overlap(enc, logical_state(code, a, b)), 1.0, 1e-10);

            auto zbar = enc;
            zbar.apply_pauli(code.logical_z());
            EXPECT_NEAR(overlap(zbar, logical_state(code, a, -b)), 1.0, 1e-10);
            auto xbar = enc;
            xbar.apply_pauli(code.logical_x());
            EXPECT_NEAR(overlap(xbar, logical_state(code, b, a)), 1.0, 1e-10);
        }
    }
}

TEST(Encoder, ZeroInputGivesCosetSuperposition) {
    const auto code = code::build_css(4);
    const auto enc = protocol::encode_qubit(code, 1.0, 0.0);
    const auto expected = logical_state(code, 1.0, 0.0);
    for (std::size_t i = 0; i < enc.dim(); ++i) {
        EXPECT_NEAR(std::abs(enc.amplitude(i) - expected.amplitude(i)), 0.0, 1e-12);
    }
}

TEST(Decoder, EveryBranchRecoversTheInput) {
    for (const std::size_t n : {4, 6}) {
        const auto code = code::build_css(n);
        const auto [a, b] = sim::random_qubit_state(n);
        const auto enc = protocol::encode_qubit(code, a, b);
        const auto psi = StateVector::from_amplitudes({a, b});
        for (std::size_t r = 1; r <= n; ++r) {
            const auto layout = circuits::decoder_layout(code, r);
            const auto dec = circuits::synth_decoder(code, r);
            for (std::size_t o = 0; o < (std::size_t{1} << (n - 2)); ++o) {
                std::vector<std::uint8_t> forced;
                for (std::size_t k = 0; k < n - 2; ++k) {
                    forced.push_back((o >> k) & 1U);
                }
                const auto run = sim::apply_circuit_forced(enc, dec, forced);
                EXPECT_NEAR(run.record.probabilities.front(), 0.5, 1e-10);
                const std::uint32_t keep[] = {layout.control};
                EXPECT_NEAR(sim::fidelity_qubit(sim::partial_trace(run.state, keep), psi), 1.0,
                            1e-10)
                    << "n=" << n << " r=" << r << " outcomes=" << o;
            }
        }
    }
}

TEST(Mixture, ReducedStateMatchesBranchMixture) {
    const auto code = code::build_css(4);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto [a, b] = sim::random_qubit_state(seed);
        const auto enc = protocol::encode_qubit(code, a, b);
        for (std::size_t r = 1; r <= 4; ++r) {
            const auto held = circuits::decoder_layout(code, r).held;
            const auto rho = sim::partial_trace(enc, held);
            EXPECT_TRUE(sim::codeword_mixture_check(rho, code, r, a, b));
        }
    }
}

TEST(Mixture, PerturbationIsDetected) {
    const auto code = code::build_css(4);
    const auto [a, b] = sim::random_qubit_state(8);
    const auto held = circuits::decoder_layout(code, 4).held;
    auto rho = sim::partial_trace(protocol::encode_qubit(code, a, b), held);
    rho.at(0, 0) += 1e-3;
    EXPECT_FALSE(sim::codeword_mixture_check(rho, code, 4, a, b));
}

TEST(Mixture, ClassicalInputIsUniformOverBranches) {
    const auto code = code::build_css(4);
    const auto held = circuits::decoder_layout(code, 1).held;
    const auto rho = sim::partial_trace(protocol::encode_qubit(code, 1.0, 0.0), held);
    // Star of vertex 1 sees the even-weight strings 000, 011, 101, 110.
    for (std::size_t i = 0; i < 8; ++i) {
        const double want = std::popcount(i) % 2 == 0 ? 0.25 : 0.0;
        EXPECT_NEAR(rho.at(i, i).real(), want, 1e-12);
        for (std::size_t j = 0; j < 8; ++j) {
            if (i != j) {
                EXPECT_NEAR(std::abs(rho.at(i, j)), 0.0, 1e-12);
            }
        }
    }
}
