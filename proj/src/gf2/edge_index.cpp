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
#include "summon/gf2/edge_index.hpp"

#include "summon/error.hpp"

namespace summon::gf2 {

EdgeIndexMap::EdgeIndexMap(std::size_t n) : n_(n) {
    if (n < 2) {
        throw InvalidParameter("complete graph needs at least 2 vertices");
    }
}

std::size_t EdgeIndexMap::index(std::size_t i, std::size_t j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_ || i == j) {
        throw InvalidEdge("no edge (" + std::to_string(i) + "," + std::to_string(j) + ") in K_" +
                          std::to_string(n_));
    }
    if (i > j) {
        std::swap(i, j);
    }
    // Edges before row i: sum_{a<i} (n - a) = (i-1)(2n-i)/2, 1-based.
    return (i - 1) * (2 * n_ - i) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> EdgeIndexMap::edge(std::size_t index) const {
    if (index >= edge_count()) {
        throw InvalidEdge("edge index " + std::to_string(index) + " out of range for K_" +
                          std::to_string(n_));
    }
    std::size_t i = 1;
    std::size_t row_len = n_ - 1;
    while (index >= row_len) {
        index -= row_len;
        ++i;
        --row_len;
    }
    return {i, i + 1 + index};
}

std::string EdgeIndexMap::label(std::size_t index) const {
    const auto [i, j] = edge(index);
    return "e_" + std::to_string(i) + "_" + std::to_string(j);
}

std::size_t edge_index(std::size_t i, std::size_t j, std::size_t n) {
    return EdgeIndexMap(n).index(i, j);
}

} // namespace summon::gf2
