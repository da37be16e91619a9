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
#include "summon/protocol/routing.hpp"

#include <algorithm>

#include "summon/code/stabilizer_code.hpp"
#include "summon/error.hpp"
#include "summon/gf2/edge_index.hpp"

namespace summon::protocol {

std::string agent_name(const Agent &a) {
    switch (a.role) {
    case AgentRole::kStart:
        return "S";
    case AgentRole::kRequest:
        return "y_" + std::to_string(a.diamond);
    case AgentRole::kReveal:
        return "z_" + std::to_string(a.diamond);
    }
    return "?";
}

const spacetime::Event &agent_event(const spacetime::Configuration &c, const Agent &a) {
    switch (a.role) {
    case AgentRole::kStart:
        return c.start;
    case AgentRole::kRequest:
        return c.diamond(a.diamond).request;
    case AgentRole::kReveal:
        return c.diamond(a.diamond).reveal;
    }
    throw InvalidParameter("unknown agent role");
}

std::vector<std::uint32_t> RoutingPlan::held_by(const Agent &a) const {
    std::vector<std::uint32_t> out;
    for (std::size_t q = 0; q < initial_holder.size(); ++q) {
        if (initial_holder[q] == a) {
            out.push_back(static_cast<std::uint32_t>(q));
        }
    }
    return out;
}

std::vector<std::uint32_t> RoutingPlan::bypass_qubits() const {
    std::vector<std::uint32_t> out;
    for (std::size_t q = 0; q < initial_holder.size(); ++q) {
        if (initial_holder[q].role == AgentRole::kReveal) {
            out.push_back(static_cast<std::uint32_t>(q));
        }
    }
    return out;
}

RoutingPlan build_routing(const spacetime::Configuration &c) {
    const spacetime::ValidationReport report = spacetime::validate(c);
    if (!report.valid()) {
        throw InvalidConfiguration("invalid configuration:\n" + report.to_string());
    }
    RoutingPlan plan;
    plan.n = c.size();
    plan.n_tilde = code::even_order(plan.n);
    if (plan.n_tilde < 4) {
        throw InvalidConfiguration("summoning needs at least 3 diamonds");
    }
    const gf2::EdgeIndexMap edges(plan.n_tilde);
    plan.initial_holder.resize(edges.edge_count());
    for (std::size_t q = 0; q < edges.edge_count(); ++q) {
        const auto [i, j] = edges.edge(q);
        if (j > plan.n) {
            plan.initial_holder[q] = reveal_agent(i);
            continue;
        }
        const auto &di = c.diamond(i);
        const auto &dj = c.diamond(j);
        std::size_t holder = 0;
        if (spacetime::precedes(di.request, dj.reveal)) {
            holder = i;
        } else if (spacetime::precedes(dj.request, di.reveal)) {
            holder = j;
        } else {
            throw InvalidConfiguration("diamonds " + std::to_string(i) + " and " +
                                       std::to_string(j) + " are not causally related");
        }
        if (!spacetime::precedes(c.start, c.diamond(holder).request)) {
            throw InvalidConfiguration("start point cannot reach request point y_" +
                                       std::to_string(holder) + " which must hold e_" +
                                       std::to_string(i) + "_" + std::to_string(j));
        }
        plan.initial_holder[q] = request_agent(holder);
    }
    return plan;
}

std::vector<Message> plan_messages(const RoutingPlan &plan,
                                   const std::vector<std::size_t> &requested) {
    const gf2::EdgeIndexMap edges(plan.n_tilde);
    std::vector<Message> out;
    for (std::size_t q = 0; q < plan.initial_holder.size(); ++q) {
        const auto qubit = static_cast<std::uint32_t>(q);
        const Agent holder = plan.initial_holder[q];
        out.push_back({start_agent(), holder, qubit});
        if (holder.role != AgentRole::kRequest) {
            continue;
        }
        const auto [i, j] = edges.edge(q);
        const std::size_t self = holder.diamond;
        const bool is_requested =
            std::find(requested.begin(), requested.end(), self) != requested.end();
        const std::size_t dest = is_requested ? self : (self == i ? j : i);
        out.push_back({holder, reveal_agent(dest), qubit});
    }
    return out;
}

std::vector<std::uint32_t> delivered_to(const std::vector<Message> &messages, std::size_t r) {
    // The last message carrying a qubit decides where it ends up.
    std::vector<std::pair<std::uint32_t, Agent>> final_stop;
    for (const auto &m : messages) {
        auto it = std::find_if(final_stop.begin(), final_stop.end(),
                               [&](const auto &p) { return p.first == m.qubit; });
        if (it == final_stop.end()) {
            final_stop.emplace_back(m.qubit, m.to);
        } else {
            it->second = m.to;
        }
    }
    std::vector<std::uint32_t> out;
    for (const auto &[q, agent] : final_stop) {
        if (agent == reveal_agent(r)) {
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Message> causality_violations(const spacetime::Configuration &c,
                                          const std::vector<Message> &messages) {
    std::vector<Message> bad;
    for (const auto &m : messages) {
        if (!spacetime::precedes(agent_event(c, m.from), agent_event(c, m.to))) {
            bad.push_back(m);
        }
    }
    return bad;
}

} // namespace summon::protocol
