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
#include <utility>
#include <vector>

#include "summon/code/pauli.hpp"
#include "summon/graph.hpp"

namespace summon::code {

/// Vertex (j, (a, b)) of G_CWS: the incidence of diamond j with edge {a, b}
/// of K_N, where j ∈ {a, b} and a < b.
struct CwsVertex {
    std::size_t diamond;
    std::pair<std::size_t, std::size_t> edge;

    friend bool operator==(const CwsVertex &, const CwsVertex &) = default;
};

/// Codeword-stabilized comparison code, kept structurally: the graph whose
/// graph state is the word stabilizer, and the two word operators.
struct CwsCode {
    std::size_t n = 0;
    std::vector<CwsVertex> vertices;
    Graph graph;
    std::vector<PauliOperator> word_operators;
};

/// G_CWS as the line graph of G' = (V_K ∪ E_K, {(v, (v, w))}). Vertex order
/// follows the edges of G': for each edge {a, b} of K_N in canonical order,
/// (a, (a, b)) then (b, (a, b)). Throws InvalidParameter for n < 3.
CwsCode build_cws(std::size_t n);

} // namespace summon::code
