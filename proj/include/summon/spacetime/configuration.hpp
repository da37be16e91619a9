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
#include <string>
#include <vector>

#include "summon/graph.hpp"
#include "summon/spacetime/event.hpp"

namespace summon::spacetime {

/// Region between a request point and a reveal point.
struct CausalDiamond {
    std::size_t id = 0;
    Event request;
    Event reveal;

    friend bool operator==(const CausalDiamond &, const CausalDiamond &) = default;
};

/// y1 ≺ z2 or y2 ≺ z1.
bool causally_related(const CausalDiamond &d1, const CausalDiamond &d2);

struct Configuration {
    std::size_t dim = 0;
    Event start;
    std::vector<CausalDiamond> diamonds;

    [[nodiscard]] std::size_t size() const noexcept { return diamonds.size(); }
    /// Throws InvalidParameter for an unknown id.
    [[nodiscard]] const CausalDiamond &diamond(std::size_t id) const;
};

enum class ViolationKind {
    kMalformed,      // dimension / id problems
    kEmptyDiamond,   // request does not precede reveal
    kRevealNotInFuture,
    kNotCausallyRelated,
};

struct Violation {
    ViolationKind kind;
    /// Offending diamond ids (one or two).
    std::vector<std::size_t> ids;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    [[nodiscard]] bool valid() const noexcept { return violations.empty(); }
    /// One violation per line.
    [[nodiscard]] std::string to_string() const;
};

/// Every violation, not just the first. Ids must be exactly 1..N.
ValidationReport validate(const Configuration &c);

/// K_N over the diamond ids (vertex k ↔ id k+1). Throws InvalidConfiguration.
Graph to_complete_graph(const Configuration &c);

/// Undirected DOT graph: one vertex per id, an edge per causally related
/// pair. Works on invalid configurations too.
std::string to_dot(const Configuration &c);

} // namespace summon::spacetime
