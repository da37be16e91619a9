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
#include "summon/code/cws_code.hpp"

#include <string>

#include "summon/error.hpp"
#include "summon/gf2/edge_index.hpp"

namespace summon::code {

CwsCode build_cws(std::size_t n) {
    if (n < 3) {
        throw InvalidParameter("CWS code needs at least 3 diamonds");
    }
    const gf2::EdgeIndexMap edges(n);

    // G': diamond vertices 0..n-1, then one vertex per edge of K_N.
    Graph g_prime;
    g_prime.n_vertices = n + edges.edge_count();
    CwsCode code;
    code.n = n;
    for (std::size_t e = 0; e < edges.edge_count(); ++e) {
        const auto [a, b] = edges.edge(e);
        for (const std::size_t j : {a, b}) {
            g_prime.add_edge(j - 1, n + e);
            code.vertices.push_back({j, {a, b}});
        }
    }

    code.graph = line_graph(g_prime);
    for (const auto &v : code.vertices) {
        code.graph.labels.push_back("(" + std::to_string(v.diamond) + ",(" +
                                    std::to_string(v.edge.first) + "," +
                                    std::to_string(v.edge.second) + "))");
    }

    const std::size_t n_qubits = code.vertices.size();
    code.word_operators.push_back(PauliOperator::identity(n_qubits));
    code.word_operators.push_back(PauliOperator::z_type(gf2::BitVector::ones(n_qubits)));
    return code;
}

} // namespace summon::code
