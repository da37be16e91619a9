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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "summon/spacetime/configuration.hpp"

namespace summon::protocol {

enum class AgentRole : std::uint8_t { kStart, kRequest, kReveal };

/// An agent pinned to one event: the start point S, request point y_i or
/// reveal point z_i. `diamond` is 0 for S.
struct Agent {
    AgentRole role = AgentRole::kStart;
    std::size_t diamond = 0;

    friend bool operator==(const Agent &, const Agent &) = default;
};

inline Agent start_agent() { return {AgentRole::kStart, 0}; }
inline Agent request_agent(std::size_t i) { return {AgentRole::kRequest, i}; }
inline Agent reveal_agent(std::size_t i) { return {AgentRole::kReveal, i}; }

/// "S", "y_3", "z_2".
std::string agent_name(const Agent &a);
/// Event at which the agent acts.
const spacetime::Event &agent_event(const spacetime::Configuration &c, const Agent &a);

/// Which agent S hands each qubit q_ij to.
///   q_ij with i, j <= N: A_{y_i} if y_i ≺ z_j, otherwise A_{y_j} (smaller
///     index wins when both hold);
///   q_{j,N+1} for odd N: straight to A_{z_j}.
/// A request agent holding q_ij forwards it to its own reveal agent when
/// requested and to the reveal agent of the other endpoint otherwise.
struct RoutingPlan {
    std::size_t n = 0;
    std::size_t n_tilde = 0;
    /// Indexed by canonical edge index of K_Ñ.
    std::vector<Agent> initial_holder;

    [[nodiscard]] std::size_t n_qubits() const noexcept { return initial_holder.size(); }
    /// Qubits a request agent holds after the start point's dispatch.
    [[nodiscard]] std::vector<std::uint32_t> held_by(const Agent &a) const;
    /// Qubits for the fictitious vertex (empty for even N).
    [[nodiscard]] std::vector<std::uint32_t> bypass_qubits() const;
};

/// Throws InvalidConfiguration if `c` fails validation, or if S cannot reach
/// a request agent that has to hold qubits.
RoutingPlan build_routing(const spacetime::Configuration &c);

struct Message {
    Agent from;
    Agent to;
    std::uint32_t qubit = 0;
};

/// Two-hop dataflow for the given set of requested diamonds: S → holder,
/// then holder → reveal agent. Ordered by qubit, first hop before second.
std::vector<Message> plan_messages(const RoutingPlan &plan,
                                   const std::vector<std::size_t> &requested);

/// Qubits whose last hop ends at A_{z_r}, ascending.
std::vector<std::uint32_t> delivered_to(const std::vector<Message> &messages, std::size_t r);

/// Messages whose sender event does not precede the receiver event.
std::vector<Message> causality_violations(const spacetime::Configuration &c,
                                          const std::vector<Message> &messages);

} // namespace summon::protocol
