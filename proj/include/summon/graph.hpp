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
#include <utility>
#include <vector>

namespace summon {

/// Simple undirected graph on vertices [0, n). Edges are stored once,
/// endpoints ordered (a < b), in insertion order.
struct Graph {
    std::size_t n_vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    /// Optional display names, one per vertex.
    std::vector<std::string> labels;

    [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const;
    /// Throws InvalidParameter for loops, duplicates or out-of-range ends.
    void add_edge(std::size_t a, std::size_t b);
};

Graph complete_graph(std::size_t n);

/// Vertices of the result are the edges of `g` (same order); two are
/// adjacent iff the original edges share an endpoint.
Graph line_graph(const Graph &g);

} // namespace summon
