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

#include "json.hpp"
#include "summon/protocol/summon.hpp"

namespace summon::protocol {

/// {"requested": r, "delivered": [...], "fidelity": f, "messages": [...], "seed": n}
/// plus "requested_set" and "outcomes". Messages carry sender and receiver
/// as {"agent": "y_2", "t": …, "x": […]}.
nlohmann::ordered_json run_to_json(const spacetime::Configuration &c, const SummoningRun &run);

} // namespace summon::protocol
