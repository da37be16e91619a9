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

namespace summon::gf2 {

/// Bijection between the undirected edges of K_n and positions
/// [0, C(n,2)). Vertices are 1-based; edges are ordered row-major:
/// (1,2), (1,3), ..., (1,n), (2,3), ...
class EdgeIndexMap {
  public:
    explicit EdgeIndexMap(std::size_t n);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return n_; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return n_ * (n_ - 1) / 2; }

    /// Throws InvalidEdge for i == j or a vertex outside [1, n].
    [[nodiscard]] std::size_t index(std::size_t i, std::size_t j) const;
    /// Endpoints (i, j) with i < j.
    [[nodiscard]] std::pair<std::size_t, std::size_t> edge(std::size_t index) const;
    /// "e_<i>_<j>" with i < j.
    [[nodiscard]] std::string label(std::size_t index) const;

  private:
    std::size_t n_;
};

std::size_t edge_index(std::size_t i, std::size_t j, std::size_t n);

constexpr std::size_t choose2(std::size_t n) noexcept { return n * (n - 1) / 2; }

} // namespace summon::gf2
