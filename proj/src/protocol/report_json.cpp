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
#include "summon/protocol/report_json.hpp"

#include "summon/gf2/edge_index.hpp"

namespace summon::protocol {

using nlohmann::ordered_json;

namespace {

ordered_json endpoint(const spacetime::Configuration &c, const Agent &a) {
    const spacetime::Event &e = agent_event(c, a);
    return ordered_json{{"agent", agent_name(a)}, {"t", e.t}, {"x", e.x}};
}

} // namespace

ordered_json run_to_json(const spacetime::Configuration &c, const SummoningRun &run) {
    const gf2::EdgeIndexMap edges(run.n_tilde);
    ordered_json messages = ordered_json::array();
    for (const auto &m : run.messages) {
        messages.push_back(
            {{"from", endpoint(c, m.from)}, {"to", endpoint(c, m.to)}, {"qubit", edges.label(m.qubit)}});
    }
    return ordered_json{{"requested", run.requested},
                {"requested_set", run.requested_set},
                {"delivered", run.delivered_labels},
                {"fidelity", run.fidelity},
                {"outcomes", run.record.outcomes},
                {"messages", messages},
                {"seed", run.seed}};
}

} // namespace summon::protocol
