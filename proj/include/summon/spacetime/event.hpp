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
#include <vector>

namespace summon::spacetime {

/// Point in flat Minkowski space, c = 1. `x` holds 1 to 3 spatial coordinates.
struct Event {
    double t = 0.0;
    std::vector<double> x;

    [[nodiscard]] std::size_t dim() const noexcept { return x.size(); }

    friend bool operator==(const Event &, const Event &) = default;
};

/// Throws InvalidParameter for non-finite coordinates or dim outside 1..3.
void check_event(const Event &e);

/// b lies in the closed future light cone of a: b.t - a.t >= |b.x - a.x|.
/// Exact comparison, no tolerance. Throws DimensionMismatch.
bool precedes(const Event &a, const Event &b);

/// Boost with velocity `v` (|v| < 1) along spatial axis `axis`.
Event boost(const Event &e, double v, std::size_t axis = 0);

} // namespace summon::spacetime
