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

#include "summon/spacetime/configuration.hpp"

namespace summon::protocol {

/// Four diamonds in 2+1d. Request points at t = 0: y_1 at the centroid of an
/// equilateral triangle of circumradius 2, y_2, y_3, y_4 at its vertices
/// (angles 90°, 210°, 330°). Reveal points at t = 2.5: z_1 above the
/// centroid, z_k above the midpoint of the edge from vertex k to the next
/// vertex in cyclic order. Start point at t = -3 above the centroid.
spacetime::Configuration make_prism_config();

/// Three diamonds: the prism without its centroid diamond, renumbered 1..3.
spacetime::Configuration make_triangle_config();

/// `n` diamonds on one worldline in 1+1d, each strictly after the previous:
/// y_k = (2k, 0), z_k = (2k + 1, 0), start at the origin.
spacetime::Configuration make_chain_config(std::size_t n);

} // namespace summon::protocol
