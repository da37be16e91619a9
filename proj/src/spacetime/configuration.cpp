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
#include "summon/spacetime/configuration.hpp"

#include <algorithm>
#include <sstream>

#include "summon/error.hpp"

namespace summon::spacetime {

bool causally_related(const CausalDiamond &d1, const CausalDiamond &d2) {
    return precedes(d1.request, d2.reveal) || precedes(d2.request, d1.reveal);
}

const CausalDiamond &Configuration::diamond(std::size_t id) const {
    for (const auto &d : diamonds) {
        if (d.id == id) {
            return d;
        }
    }
    throw InvalidParameter("no diamond with id " + std::to_string(id));
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto &v : violations) {
        out << v.message << '\n';
    }
    return out.str();
}

namespace {

bool event_ok(const Event &e, std::size_t dim) {
    try {
        check_event(e);
    } catch (const Error &) {
        return false;
    }
    return e.dim() == dim;
}

} // namespace

ValidationReport validate(const Configuration &c) {
    ValidationReport report;
    auto add = [&](ViolationKind kind, std::vector<std::size_t> ids, std::string message) {
        report.violations.push_back({kind, std::move(ids), std::move(message)});
    };

    if (c.dim < 1 || c.dim > 3) {
        add(ViolationKind::kMalformed, {}, "dim must be 1, 2 or 3");
        return report;
    }
    if (c.diamonds.empty()) {
        add(ViolationKind::kMalformed, {}, "configuration has no diamonds");
        return report;
    }
    bool geometry_ok = event_ok(c.start, c.dim);
    if (!geometry_ok) {
        add(ViolationKind::kMalformed, {}, "start event has wrong dimension or bad coordinates");
    }
    std::vector<std::size_t> ids;
    for (const auto &d : c.diamonds) {
        ids.push_back(d.id);
        if (!event_ok(d.request, c.dim) || !event_ok(d.reveal, c.dim)) {
            add(ViolationKind::kMalformed, {d.id},
                "diamond " + std::to_string(d.id) + ": wrong dimension or bad coordinates");
            geometry_ok = false;
        }
    }
    std::vector<std::size_t> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (sorted[k] != k + 1) {
            add(ViolationKind::kMalformed, {}, "diamond ids must be exactly 1..N");
            break;
        }
    }
    if (!geometry_ok) {
        return report;
    }

    for (const auto &d : c.diamonds) {
        if (!precedes(d.request, d.reveal)) {
            add(ViolationKind::kEmptyDiamond, {d.id},
                "diamond " + std::to_string(d.id) + ": request does not precede reveal");
        }
    }
    for (const auto &d : c.diamonds) {
        if (!precedes(c.start, d.reveal)) {
            add(ViolationKind::kRevealNotInFuture, {d.id},
                "C1 violation: reveal of diamond " + std::to_string(d.id) +
                    " is not in the future of the start point");
        }
    }
    for (std::size_t a = 0; a < c.diamonds.size(); ++a) {
        for (std::size_t b = a + 1; b < c.diamonds.size(); ++b) {
            const auto &da = c.diamonds[a];
            const auto &db = c.diamonds[b];
            if (!causally_related(da, db)) {
                add(ViolationKind::kNotCausallyRelated, {da.id, db.id},
                    "C2 violation: diamonds " + std::to_string(da.id) + " and " +
                        std::to_string(db.id) + " are not causally related");
            }
        }
    }
    return report;
}

Graph to_complete_graph(const Configuration &c) {
    const ValidationReport report = validate(c);
    if (!report.valid()) {
        throw InvalidConfiguration("invalid configuration:\n" + report.to_string());
    }
    Graph g = complete_graph(c.size());
    g.labels.clear();
    for (std::size_t k = 0; k < c.size(); ++k) {
        g.labels.push_back(std::to_string(k + 1));
    }
    return g;
}

std::string to_dot(const Configuration &c) {
    std::vector<const CausalDiamond *> order;
    for (const auto &d : c.diamonds) {
        order.push_back(&d);
    }
    std::sort(order.begin(), order.end(),
              [](const CausalDiamond *a, const CausalDiamond *b) { return a->id < b->id; });
    std::ostringstream out;
    out << "graph causal {\n";
    for (const auto *d : order) {
        out << "  " << d->id << " [label=\"" << d->id << "\"];\n";
    }
    for (std::size_t a = 0; a < order.size(); ++a) {
        for (std::size_t b = a + 1; b < order.size(); ++b) {
            if (order[a]->request.dim() == order[b]->reveal.dim() &&
                causally_related(*order[a], *order[b])) {
                out << "  " << order[a]->id << " -- " << order[b]->id << ";\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace summon::spacetime
