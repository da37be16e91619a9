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
#include "summon/spacetime/event.hpp"

#include <cmath>

#include "summon/error.hpp"

namespace summon::spacetime {

void check_event(const Event &e) {
    if (e.x.empty() || e.x.size() > 3) {
        throw InvalidParameter("events need 1 to 3 spatial coordinates");
    }
    if (!std::isfinite(e.t)) {
        throw InvalidParameter("non-finite event time");
    }
    for (const double c : e.x) {
        if (!std::isfinite(c)) {
            throw InvalidParameter("non-finite event coordinate");
        }
    }
}

bool precedes(const Event &a, const Event &b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("events have different spatial dimension");
    }
    const double dt = b.t - a.t;
    if (dt < 0.0) {
        return false;
    }
    double dist_sq = 0.0;
    for (std::size_t k = 0; k < a.dim(); ++k) {
        const double d = b.x[k] - a.x[k];
        dist_sq += d * d;
    }
    return dt * dt >= dist_sq;
}

Event boost(const Event &e, double v, std::size_t axis) {
    if (axis >= e.dim()) {
        throw DimensionMismatch("boost axis out of range");
    }
    if (!(std::abs(v) < 1.0)) {
        throw InvalidParameter("boost velocity must satisfy |v| < 1");
    }
    const double gamma = 1.0 / std::sqrt(1.0 - v * v);
    Event out = e;
    out.t = gamma * (e.t - v * e.x[axis]);
    out.x[axis] = gamma * (e.x[axis] - v * e.t);
    return out;
}

} // namespace summon::spacetime
