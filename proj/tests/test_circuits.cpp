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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "summon/circuits/synth.hpp"
#include "summon/circuits/text_format.hpp"
#include "summon/code/stabilizer_code.hpp"
#include "summon/error.hpp"

using namespace summon;
using circuits::Circuit;
using circuits::GateKind;

namespace {

std::string read_golden(const std::string &name) {
    std::ifstream in(std::filesystem::path(SUMMON_QEC_TEST_GOLDENS) / name, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

TEST(Circuit, AppendValidates) {
    Circuit c(3);
    EXPECT_THROW(c.h(3), InvalidParameter);
    EXPECT_THROW(c.cnot(1, 1), InvalidParameter);
    EXPECT_THROW(c.x_if(0, 1), ClassicalBitError);
    const auto bit = c.measure(code::PauliOperator::from_string("ZZI"));
    EXPECT_EQ(bit, 0U);
    c.x_if(bit, 2);
    EXPECT_EQ(c.n_cbits(), 1U);
    EXPECT_EQ(c.touched_qubits(), (std::vector<std::uint32_t>{0, 1, 2}));
}

TEST(Circuit, CountsAreExact) {
    Circuit c(2);
    c.h(0);
    c.h(1);
    c.cnot(0, 1);
    c.cz(0, 1);
    c.measure(code::PauliOperator::from_string("ZZ"));
    c.z_if(0, 0);
    const auto n = circuits::gate_count(c);
    EXPECT_EQ(n[GateKind::kH], 2U);
    EXPECT_EQ(n[GateKind::kCnot], 1U);
    EXPECT_EQ(n[GateKind::kCz], 1U);
    EXPECT_EQ(n[GateKind::kMeasurePauli], 1U);
    EXPECT_EQ(n[GateKind::kZIf], 1U);
    EXPECT_EQ(n.total(), 6U);
    EXPECT_EQ(n.unitary_total(), 4U);
}

TEST(Encoder, GateCountsFollowClosedForm) {
    for (std::size_t n = 4; n <= 12; n += 2) {
        const auto counts = circuits::gate_count(circuits::synth_encoder(code::build_css(n)));
        EXPECT_EQ(counts[GateKind::kH], n - 2);
        EXPECT_EQ(counts[GateKind::kCnot], 2 * (n - 2) * (n - 2));
        EXPECT_EQ(counts.total(), counts.unitary_total());
    }
}

TEST(Encoder, StageTwoControlsAreFreshQubits) {
    // Every Hadamard hits a qubit no earlier gate has touched, so it still holds |0⟩.
    const auto c = circuits::synth_encoder(code::build_css(8));
    std::set<std::uint32_t> touched;
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::kH) {
            EXPECT_EQ(touched.count(g.qubits[0]), 0U);
        }
        touched.insert(g.qubits.begin(), g.qubits.end());
    }
}

TEST(Decoder, ActsOnlyOnTheStar) {
    for (std::size_t n = 4; n <= 10; n += 2) {
        const auto code = code::build_css(n);
        for (std::size_t r = 1; r <= n; ++r) {
            const auto c = circuits::synth_decoder(code, r);
            std::vector<std::uint32_t> star;
            for (std::size_t k = 1; k <= n; ++k) {
                if (k != r) {
                    star.push_back(static_cast<std::uint32_t>(
                        oracle::qubit_of(static_cast<int>(n), static_cast<int>(r),
                                         static_cast<int>(k))));
                }
            }
            std::sort(star.begin(), star.end());
            EXPECT_EQ(c.touched_qubits(), star);
            const auto counts = circuits::gate_count(c);
            EXPECT_EQ(counts[GateKind::kMeasurePauli], n - 2);
            EXPECT_EQ(counts[GateKind::kCnot], n - 2);
            EXPECT_LE(counts[GateKind::kXIf], n - 2);
        }
    }
    EXPECT_THROW(circuits::synth_decoder(code::build_css(4), 0), InvalidParameter);
    EXPECT_THROW(circuits::synth_decoder(code::build_css(4), 5), InvalidParameter);
}

TEST(Decoder, ParityOperatorsCommuteWithStabilizersOnTheStar) {
    // Pairwise commuting, and compatible with every stabilizer element that
    // lives entirely on the held qubits and with X on the whole star (the
    // logical X representative the reveal agent holds).
    for (const int n : {4, 6}) {
        const auto code = code::build_css(n);
        std::vector<oracle::Pauli> gens;
        for (const auto &g : code.generators()) {
            oracle::Pauli m;
            for (const auto q : g.z_part().support()) {
                m.z |= oracle::Mask{1} << q;
            }
            for (const auto q : g.x_part().support()) {
                m.x |= oracle::Mask{1} << q;
            }
            gens.push_back(m);
        }
        const auto group = oracle::group(gens);
        for (int r = 1; r <= n; ++r) {
            const oracle::Mask star = oracle::star(n, r);
            std::vector<oracle::Pauli> parities;
            const auto decoder = circuits::synth_decoder(code, r);
            for (const auto &g : decoder.gates()) {
                if (g.kind == GateKind::kMeasurePauli) {
                    oracle::Pauli m;
                    for (const auto q : g.pauli->z_part().support()) {
                        m.z |= oracle::Mask{1} << q;
                    }
                    parities.push_back(m);
                }
            }
            ASSERT_EQ(parities.size(), std::size_t(n - 2));
            std::size_t local = 0;
            for (const auto &p : parities) {
                EXPECT_TRUE(oracle::commute(p, {0, star}));
                for (const auto &q : parities) {
                    EXPECT_TRUE(oracle::commute(p, q));
                }
                for (const auto &s : group) {
                    if (((s.z | s.x) & ~star) == 0) {
                        ++local;
                        EXPECT_TRUE(oracle::commute(p, s));
                    }
                }
            }
            EXPECT_GT(local, 0U);
        }
    }
}

TEST(Decoder, BranchResolutionPicksTheCodewordProjection) {
    // Enumerate C2 directly; the projection of every element onto the star
    // must be recovered from its own adjacent parities.
    for (const int n : {4, 6}) {
        const auto code = code::build_css(n);
        std::vector<oracle::Mask> c2_rows;
        for (int j = 2; j <= n - 1; ++j) {
            c2_rows.push_back(oracle::star(n, 1) ^ oracle::star(n, j));
        }
        for (int r = 1; r <= n; ++r) {
            std::vector<int> held;
            for (int k = 1; k <= n; ++k) {
                if (k != r) {
                    held.push_back(oracle::qubit_of(n, r, k));
                }
            }
            std::set<std::vector<std::uint8_t>> seen;
            for (oracle::Mask sel = 0; sel < (oracle::Mask{1} << c2_rows.size()); ++sel) {
                oracle::Mask x = 0;
                for (std::size_t k = 0; k < c2_rows.size(); ++k) {
                    if ((sel >> k) & 1U) {
                        x ^= c2_rows[k];
                    }
                }
                std::string branch;
                for (const int q : held) {
                    branch += ((x >> q) & 1U) ? '1' : '0';
                }
                std::vector<std::uint8_t> outcomes;
                for (std::size_t i = 0; i + 1 < held.size(); ++i) {
                    outcomes.push_back(branch[i] != branch[i + 1]);
                }
                seen.insert(outcomes);
                EXPECT_EQ(circuits::resolve_branch(code, r, outcomes).to_string(), branch);
            }
            // 2^(n-2) elements, each with its own outcome vector.
            EXPECT_EQ(seen.size(), std::size_t{1} << (n - 2));
        }
    }
}

TEST(Decoder, WrongOutcomeCountIsRejected) {
    const auto code = code::build_css(4);
    const std::uint8_t one[] = {0};
    EXPECT_THROW(circuits::resolve_branch(code, 1, one), DimensionMismatch);
}

TEST(GraphState, CountsPerVertexAndEdge) {
    Graph empty;
    empty.n_vertices = 3;
    const auto e = circuits::gate_count(circuits::synth_graph_state(empty));
    EXPECT_EQ(e[GateKind::kH], 3U);
    EXPECT_EQ(e[GateKind::kCz], 0U);
    const auto cws = circuits::gate_count(circuits::synth_graph_state(line_graph(complete_graph(5))));
    EXPECT_EQ(cws[GateKind::kH], 10U);
    EXPECT_EQ(cws[GateKind::kCz], 30U);
}

TEST(TextFormat, RoundTrip) {
    const auto code = code::build_css(6);
    for (const auto &c : {circuits::synth_encoder(code), circuits::synth_decoder(code, 3),
                          circuits::synth_graph_state(complete_graph(4))}) {
        const std::string text = circuits::to_text(c);
        const Circuit back = circuits::from_text(text);
        EXPECT_EQ(circuits::to_text(back), text);
        EXPECT_EQ(back.gates().size(), c.gates().size());
    }
}

TEST(TextFormat, RejectsMalformedInput) {
    EXPECT_THROW(circuits::from_text("qubits 2\nH q2\n"), InvalidParameter);
    EXPECT_THROW(circuits::from_text("qubits 2\nFOO q0\n"), InvalidParameter);
    EXPECT_THROW(circuits::from_text("H q0\n"), InvalidParameter);
    EXPECT_THROW(circuits::from_text("qubits 2\ncbits 1\nX? c0 q1\n"), ClassicalBitError);
}

TEST(TextFormat, ParsesHandWrittenDecoder) {
    const Circuit c = circuits::from_text("qubits 3\n"
                                          "cbits 1\n"
                                          "MPP Z q0 Z q2 -> c0\n"
                                          "X? c0 q1\n"
                                          "CNOT q1 q0\n");
    ASSERT_EQ(c.gates().size(), 3U);
    EXPECT_EQ(c.gates()[0].pauli->to_string(), "ZIZ");
    EXPECT_EQ(c.gates()[1].kind, GateKind::kXIf);
    EXPECT_EQ(c.gates()[2].qubits, (std::vector<std::uint32_t>{1, 0}));
}

TEST(Goldens, FourVertexCircuitsAreBitExact) {
    const auto code = code::build_css(4);
    EXPECT_EQ(circuits::to_text(circuits::synth_encoder(code)), read_golden("encoder_n4.txt"));
    for (std::size_t r = 1; r <= 4; ++r) {
        EXPECT_EQ(circuits::to_text(circuits::synth_decoder(code, r)),
                  read_golden("decoder_n4_r" + std::to_string(r) + ".txt"))
            << "r=" << r;
    }
}

TEST(Goldens, EncoderGoldenStructure) {
    // Independent reading of the golden: stage 1 fans q_12 out over the star
    // of vertex 1, then each Hadamard is followed by CNOTs covering A_1 + A_j.
    const Circuit c = circuits::from_text(read_golden("encoder_n4.txt"));
    const auto &g = c.gates();
    ASSERT_EQ(g.size(), 10U);
    const int e12 = oracle::qubit_of(4, 1, 2);
    EXPECT_EQ(g[0].qubits, (std::vector<std::uint32_t>{std::uint32_t(e12), std::uint32_t(oracle::qubit_of(4, 1, 3))}));
    EXPECT_EQ(g[1].qubits, (std::vector<std::uint32_t>{std::uint32_t(e12), std::uint32_t(oracle::qubit_of(4, 1, 4))}));
    std::size_t i = 2;
    for (int j = 2; j <= 3; ++j) {
        ASSERT_EQ(g[i].kind, GateKind::kH);
        const std::uint32_t ctrl = g[i].qubits[0];
        EXPECT_EQ(ctrl, std::uint32_t(oracle::qubit_of(4, j, 4)));
        oracle::Mask covered = oracle::Mask{1} << ctrl;
        ++i;
        while (i < g.size() && g[i].kind == GateKind::kCnot) {
            EXPECT_EQ(g[i].qubits[0], ctrl);
            covered |= oracle::Mask{1} << g[i].qubits[1];
            ++i;
        }
        EXPECT_EQ(covered, oracle::star(4, 1) ^ oracle::star(4, j));
    }
}
