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

#include "oracles.hpp"
#include "summon/error.hpp"
#include "summon/protocol/prism.hpp"
#include "summon/protocol/report_json.hpp"
#include "summon/protocol/routing.hpp"
#include "summon/protocol/summon.hpp"
#include "summon/sim/rng.hpp"

using namespace summon;
using protocol::AgentRole;

namespace {

std::vector<std::uint32_t> star_of(int n, int r) {
    std::vector<std::uint32_t> out;
    for (int k = 1; k <= n; ++k) {
        if (k != r) {
            out.push_back(static_cast<std::uint32_t>(oracle::qubit_of(n, r, k)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<spacetime::Configuration> corpus() {
    return {protocol::make_prism_config(), protocol::make_triangle_config(),
            protocol::make_chain_config(3), protocol::make_chain_config(4)};
}

} // namespace

TEST(Routing, PrismAssignsEveryEdgeToARequestAgent) {
    const auto plan = protocol::build_routing(protocol::make_prism_config());
    EXPECT_EQ(plan.n, 4U);
    EXPECT_EQ(plan.n_tilde, 4U);
    ASSERT_EQ(plan.n_qubits(), 6U);
    EXPECT_TRUE(plan.bypass_qubits().empty());
    for (std::size_t d = 1; d <= 4; ++d) {
        EXPECT_GE(plan.held_by(protocol::request_agent(d)).size(), 1U) << "y_" << d;
    }
    // Centroid reaches every edge midpoint, so it takes all of its edges.
    EXPECT_EQ(plan.held_by(protocol::request_agent(1)).size(), 3U);
}

TEST(Routing, OddCountBypassesRequestAgents) {
    const auto plan = protocol::build_routing(protocol::make_triangle_config());
    EXPECT_EQ(plan.n_tilde, 4U);
    const auto bypass = plan.bypass_qubits();
    ASSERT_EQ(bypass.size(), 3U);
    for (std::size_t j = 1; j <= 3; ++j) {
        const auto q = static_cast<std::uint32_t>(oracle::qubit_of(4, int(j), 4));
        EXPECT_EQ(plan.initial_holder[q], protocol::reveal_agent(j));
    }
}

TEST(Routing, TieBreakFavoursSmallerIndex) {
    // Chain: y_1 ≺ z_2 and also y_2 ≺ z_1 is false; make a symmetric pair instead.
    spacetime::Configuration c{1, {0, {0}}, {{1, {1, {0}}, {5, {0}}}, {2, {1, {0}}, {5, {0}}},
                                             {3, {1, {0}}, {5, {0}}}}};
    const auto plan = protocol::build_routing(c);
    EXPECT_EQ(plan.initial_holder[oracle::qubit_of(4, 1, 2)], protocol::request_agent(1));
    EXPECT_EQ(plan.initial_holder[oracle::qubit_of(4, 2, 3)], protocol::request_agent(2));
}

TEST(Routing, RejectsInvalidConfiguration) {
    auto c = protocol::make_prism_config();
    c.diamonds[0].reveal.t = -10;
    EXPECT_THROW(protocol::build_routing(c), InvalidConfiguration);
}

TEST(Routing, DeliveryIsExactlyTheStar) {
    for (const auto &c : corpus()) {
        const auto plan = protocol::build_routing(c);
        for (std::size_t r = 1; r <= c.size(); ++r) {
            const auto msgs = protocol::plan_messages(plan, {r});
            EXPECT_EQ(protocol::delivered_to(msgs, r), star_of(int(plan.n_tilde), int(r)));
            EXPECT_TRUE(protocol::causality_violations(c, msgs).empty());
        }
    }
}

TEST(Routing, SwappedAssignmentBreaksCausality) {
    // Hand the qubit to the other endpoint: on the prism at least one such
    // swap produces a message outside the light cone.
    const auto c = protocol::make_prism_config();
    const auto plan = protocol::build_routing(c);
    bool caught = false;
    const gf2::EdgeIndexMap edges(4);
    for (std::size_t q = 0; q < plan.n_qubits(); ++q) {
        auto bad = plan;
        const auto [i, j] = edges.edge(q);
        const auto holder = plan.initial_holder[q].diamond;
        bad.initial_holder[q] = protocol::request_agent(holder == i ? j : i);
        for (std::size_t r = 1; r <= 4; ++r) {
            caught = caught ||
                     !protocol::causality_violations(c, protocol::plan_messages(bad, {r})).empty();
        }
    }
    EXPECT_TRUE(caught);
}

TEST(Summon, UnitFidelityEverywhere) {
    for (const auto &c : corpus()) {
        for (std::size_t r = 1; r <= c.size(); ++r) {
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const auto [a, b] = sim::random_qubit_state(seed + 100 * r);
                const auto run = protocol::simulate_summon(c, a, b, r, seed);
                EXPECT_NEAR(run.fidelity, 1.0, 1e-10);
                EXPECT_EQ(run.requested, r);
                EXPECT_EQ(run.delivered, star_of(int(run.n_tilde), int(r)));
            }
        }
    }
}

TEST(Summon, ClassicalInput) {
    const auto c = protocol::make_prism_config();
    for (std::size_t r = 1; r <= 4; ++r) {
        EXPECT_NEAR(protocol::simulate_summon(c, 1.0, 0.0, r, 3).fidelity, 1.0, 1e-12);
    }
}

TEST(Summon, RejectsBadArguments) {
    const auto c = protocol::make_prism_config();
    EXPECT_THROW(protocol::simulate_summon(c, 1.0, 0.0, 0, 0), InvalidParameter);
    EXPECT_THROW(protocol::simulate_summon(c, 1.0, 0.0, 5, 0), InvalidParameter);
    EXPECT_THROW(protocol::simulate_summon(c, 1.0, 1.0, 1, 0), InvalidParameter);
}

TEST(Summon, DecoderRefusesPartialStar) {
    const auto code = code::build_css(4);
    const auto enc = protocol::encode_qubit(code, 1.0, 0.0);
    auto star = star_of(4, 2);
    star.pop_back();
    EXPECT_THROW(protocol::decode_at(code, 2, star, enc, 0), InsufficientQubits);
}

TEST(MultiRequest, ChainDecodesAtEarliestRequested) {
    const auto c = protocol::make_chain_config(4);
    const std::vector<std::size_t> order{1, 2, 3, 4};
    const auto [a, b] = sim::random_qubit_state(1);
    const auto run = protocol::simulate_multi_request(c, {2, 3}, order, a, b, 5);
    EXPECT_EQ(run.requested, 2U);
    EXPECT_NEAR(run.fidelity, 1.0, 1e-10);
    EXPECT_EQ(run.delivered, star_of(4, 2));
    const auto all = protocol::simulate_multi_request(c, {1, 2, 3, 4}, order, a, b, 5);
    EXPECT_EQ(all.requested, 1U);
    EXPECT_NEAR(all.fidelity, 1.0, 1e-10);
}

TEST(MultiRequest, SingletonReducesToSingleSummons) {
    const auto c = protocol::make_chain_config(4);
    const auto [a, b] = sim::random_qubit_state(4);
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto multi = protocol::simulate_multi_request(c, {k}, {1, 2, 3, 4}, a, b, 9);
        const auto single = protocol::simulate_summon(c, a, b, k, 9);
        EXPECT_EQ(multi.requested, single.requested);
        EXPECT_EQ(multi.delivered, single.delivered);
        EXPECT_EQ(multi.record, single.record);
        EXPECT_EQ(multi.fidelity, single.fidelity);
    }
}

TEST(MultiRequest, InconsistentOrderIsRejected) {
    const auto c = protocol::make_chain_config(4);
    EXPECT_THROW(protocol::simulate_multi_request(c, {2}, {2, 1, 3, 4}, 1.0, 0.0, 0),
                 InvalidConfiguration);
    EXPECT_THROW(protocol::simulate_multi_request(c, {2}, {1, 2, 3}, 1.0, 0.0, 0),
                 InvalidParameter);
    EXPECT_THROW(protocol::simulate_multi_request(c, {}, {1, 2, 3, 4}, 1.0, 0.0, 0),
                 InvalidParameter);
    // The prism is not a chain: its diamonds overlap in both directions.
    EXPECT_THROW(protocol::simulate_multi_request(protocol::make_prism_config(), {1}, {1, 2, 3, 4},
                                                  1.0, 0.0, 0),
                 InvalidConfiguration);
}

TEST(Report, JsonShape) {
    const auto c = protocol::make_triangle_config();
    const auto run = protocol::simulate_summon(c, 1.0, 0.0, 2, 11);
    const auto j = protocol::run_to_json(c, run);
    EXPECT_EQ(j.at("requested"), 2);
    EXPECT_EQ(j.at("seed"), 11);
    EXPECT_EQ(j.at("delivered"), nlohmann::json({"e_1_2", "e_2_3", "e_2_4"}));
    ASSERT_EQ(j.at("messages").size(), run.messages.size());
    EXPECT_EQ(j.at("messages")[0].at("from").at("agent"), "S");
    EXPECT_TRUE(j.at("messages")[0].at("to").contains("t"));
    EXPECT_EQ(j.begin().key(), "requested");
}
