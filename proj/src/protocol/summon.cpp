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
#include "summon/protocol/summon.hpp"

#include <algorithm>
#include <cmath>

#include "summon/circuits/synth.hpp"
#include "summon/error.hpp"

namespace summon::protocol {
namespace {

void check_normalized(sim::Amplitude alpha, sim::Amplitude beta) {
    const double norm = std::norm(alpha) + std::norm(beta);
    if (!(std::abs(norm - 1.0) <= 1e-12)) {
        throw InvalidParameter("input qubit is not normalized");
    }
}

SummoningRun run_protocol(const spacetime::Configuration &c, const RoutingPlan &plan,
                          std::vector<std::size_t> requested_set, std::size_t r,
                          sim::Amplitude alpha, sim::Amplitude beta, std::uint64_t seed) {
    check_normalized(alpha, beta);
    const code::StabilizerCode code = code::build_css(plan.n_tilde);

    SummoningRun run;
    run.requested = r;
    run.requested_set = std::move(requested_set);
    run.seed = seed;
    run.n_tilde = plan.n_tilde;
    run.messages = plan_messages(plan, run.requested_set);
    const auto bad = causality_violations(c, run.messages);
    if (!bad.empty()) {
        const auto edges = code.edges();
        throw CausalityViolation("message " + agent_name(bad.front().from) + " -> " +
                                 agent_name(bad.front().to) + " carrying " +
                                 edges.label(bad.front().qubit) + " leaves the light cone");
    }
    run.delivered = delivered_to(run.messages, r);
    const auto edges = code.edges();
    for (const auto q : run.delivered) {
        run.delivered_labels.push_back(edges.label(q));
    }

    const sim::StateVector encoded = encode_qubit(code, alpha, beta);
    DecodeResult decoded = decode_at(code, r, run.delivered, encoded, seed);
    run.record = std::move(decoded.record);
    run.fidelity = sim::fidelity_qubit(
        decoded.output, sim::StateVector::from_amplitudes({alpha, beta}));
    return run;
}

} // namespace

sim::StateVector encode_qubit(const code::StabilizerCode &code, sim::Amplitude alpha,
                              sim::Amplitude beta) {
    const std::size_t input = code.edges().index(1, 2);
    const auto start = sim::StateVector::with_qubit(code.n_qubits(), input, alpha, beta);
    return sim::apply_circuit(start, circuits::synth_encoder(code), 0).state;
}

DecodeResult decode_at(const code::StabilizerCode &code, std::size_t r,
                       std::span<const std::uint32_t> delivered, const sim::StateVector &encoded,
                       std::uint64_t seed) {
    const circuits::DecoderLayout layout = circuits::decoder_layout(code, r);
    for (const auto q : layout.held) {
        if (std::find(delivered.begin(), delivered.end(), q) == delivered.end()) {
            throw InsufficientQubits("reveal agent " + std::to_string(r) + " is missing " +
                                     code.edges().label(q));
        }
    }
    // The decoder touches only the star of r, so running it on the full
    // register and tracing out the rest equals decoding the erased state.
    const auto run = sim::apply_circuit(encoded, circuits::synth_decoder(code, r), seed);
    const std::uint32_t keep[] = {layout.control};
    return {sim::partial_trace(run.state, keep), run.record};
}

SummoningRun simulate_summon(const spacetime::Configuration &c, sim::Amplitude alpha,
                             sim::Amplitude beta, std::size_t r, std::uint64_t seed) {
    const RoutingPlan plan = build_routing(c);
    if (r < 1 || r > plan.n) {
        throw InvalidParameter("request " + std::to_string(r) + " outside [1, " +
                               std::to_string(plan.n) + "]");
    }
    return run_protocol(c, plan, {r}, r, alpha, beta, seed);
}

std::size_t earliest_requested(const spacetime::Configuration &c,
                               const std::vector<std::size_t> &requested_set,
                               const std::vector<std::size_t> &causal_order) {
    std::vector<std::size_t> sorted = causal_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted.size() != c.size() || sorted[k] != k + 1) {
            throw InvalidParameter("causal order must list every diamond id exactly once");
        }
    }
    if (requested_set.empty()) {
        throw InvalidParameter("requested set is empty");
    }
    for (const std::size_t id : requested_set) {
        if (id < 1 || id > c.size()) {
            throw InvalidParameter("requested diamond " + std::to_string(id) + " does not exist");
        }
    }
    for (std::size_t a = 0; a < causal_order.size(); ++a) {
        for (std::size_t b = a + 1; b < causal_order.size(); ++b) {
            const auto &first = c.diamond(causal_order[a]);
            const auto &later = c.diamond(causal_order[b]);
            if (!spacetime::precedes(first.request, later.reveal) ||
                spacetime::precedes(later.request, first.reveal)) {
                throw InvalidConfiguration("causal order inconsistent with geometry at diamonds " +
                                           std::to_string(first.id) + " and " +
                                           std::to_string(later.id));
            }
        }
    }
    for (const std::size_t id : causal_order) {
        if (std::find(requested_set.begin(), requested_set.end(), id) != requested_set.end()) {
            return id;
        }
    }
    throw InvalidParameter("requested set contains no diamond id");
}

SummoningRun simulate_multi_request(const spacetime::Configuration &c,
                                    const std::vector<std::size_t> &requested_set,
                                    const std::vector<std::size_t> &causal_order,
                                    sim::Amplitude alpha, sim::Amplitude beta,
                                    std::uint64_t seed) {
    const RoutingPlan plan = build_routing(c);
    const std::size_t r = earliest_requested(c, requested_set, causal_order);
    std::vector<std::size_t> requested = requested_set;
    std::sort(requested.begin(), requested.end());
    requested.erase(std::unique(requested.begin(), requested.end()), requested.end());
    return run_protocol(c, plan, requested, r, alpha, beta, seed);
}

} // namespace summon::protocol
