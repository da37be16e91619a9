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
#include "summon/graph.hpp"

#include <algorithm>

#include "summon/error.hpp"

namespace summon {

bool Graph::has_edge(std::size_t a, std::size_t b) const {
    if (a > b) {
        std::swap(a, b);
    }
    return std::find(edges.begin(), edges.end(), std::make_pair(a, b)) != edges.end();
}

void Graph::add_edge(std::size_t a, std::size_t b) {
    if (a == b || a >= n_vertices || b >= n_vertices) {
        throw InvalidParameter("invalid graph edge (" + std::to_string(a) + "," +
                               std::to_string(b) + ")");
    }
    if (has_edge(a, b)) {
        throw InvalidParameter("duplicate graph edge");
    }
    edges.emplace_back(std::min(a, b), std::max(a, b));
}

Graph complete_graph(std::size_t n) {
    Graph g;
    g.n_vertices = n;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            g.edges.emplace_back(a, b);
        }
    }
    return g;
}

Graph line_graph(const Graph &g) {
    Graph out;
    out.n_vertices = g.edges.size();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        for (std::size_t f = e + 1; f < g.edges.size(); ++f) {
            const auto [a, b] = g.edges[e];
            const auto [c, d] = g.edges[f];
            if (a == c || a == d || b == c || b == d) {
                out.edges.emplace_back(e, f);
            }
        }
    }
    return out;
}

} // namespace summon
