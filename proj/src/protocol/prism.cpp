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
#include "summon/protocol/prism.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "summon/error.hpp"

namespace summon::protocol {
namespace {

constexpr double kRadius = 2.0;
constexpr double kRevealTime = 2.5;
constexpr double kStartTime = -3.0;

std::array<std::array<double, 2>, 3> triangle_vertices() {
    std::array<std::array<double, 2>, 3> v{};
    const double deg = std::numbers::pi / 180.0;
    const double angles[] = {90.0, 210.0, 330.0};
    for (std::size_t k = 0; k < 3; ++k) {
        v[k] = {kRadius * std::cos(angles[k] * deg), kRadius * std::sin(angles[k] * deg)};
    }
    return v;
}

spacetime::CausalDiamond edge_diamond(std::size_t id, const std::array<double, 2> &a,
                                      const std::array<double, 2> &b) {
    return {id,
            {0.0, {a[0], a[1]}},
            {kRevealTime, {(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0}}};
}

} // namespace

spacetime::Configuration make_prism_config() {
    const auto v = triangle_vertices();
    spacetime::Configuration c;
    c.dim = 2;
    c.start = {kStartTime, {0.0, 0.0}};
    c.diamonds.push_back({1, {0.0, {0.0, 0.0}}, {kRevealTime, {0.0, 0.0}}});
    for (std::size_t k = 0; k < 3; ++k) {
        c.diamonds.push_back(edge_diamond(k + 2, v[k], v[(k + 1) % 3]));
    }
    return c;
}

spacetime::Configuration make_triangle_config() {
    const auto v = triangle_vertices();
    spacetime::Configuration c;
    c.dim = 2;
    c.start = {kStartTime, {0.0, 0.0}};
    for (std::size_t k = 0; k < 3; ++k) {
        c.diamonds.push_back(edge_diamond(k + 1, v[k], v[(k + 1) % 3]));
    }
    return c;
}

spacetime::Configuration make_chain_config(std::size_t n) {
    if (n == 0) {
        throw InvalidParameter("chain needs at least one diamond");
    }
    spacetime::Configuration c;
    c.dim = 1;
    c.start = {0.0, {0.0}};
    for (std::size_t k = 1; k <= n; ++k) {
        const double t = 2.0 * static_cast<double>(k);
        c.diamonds.push_back({k, {t, {0.0}}, {t + 1.0, {0.0}}});
    }
    return c;
}

} // namespace summon::protocol
