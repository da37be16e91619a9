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
#include "summon/circuits/synth.hpp"

#include <algorithm>
#include <string>

#include "summon/error.hpp"

namespace summon::circuits {
namespace {

std::vector<std::string> edge_labels(const gf2::EdgeIndexMap &edges) {
    std::vector<std::string> labels;
    labels.reserve(edges.edge_count());
    for (std::size_t e = 0; e < edges.edge_count(); ++e) {
        labels.push_back(edges.label(e));
    }
    return labels;
}

std::vector<std::uint32_t> star_qubits(const gf2::EdgeIndexMap &edges, std::size_t r) {
    const std::size_t order = edges.vertex_count();
    if (r < 1 || r > order) {
        throw InvalidParameter("requested vertex " + std::to_string(r) + " outside [1, " +
                               std::to_string(order) + "]");
    }
    std::vector<std::uint32_t> held;
    for (std::size_t k = 1; k <= order; ++k) {
        if (k != r) {
            held.push_back(static_cast<std::uint32_t>(edges.index(r, k)));
        }
    }
    return held;
}

} // namespace

Circuit synth_encoder(const code::StabilizerCode &code) {
    const std::size_t order = code.graph_order();
    const gf2::EdgeIndexMap edges = code.edges();
    if (code.x_rows().n_rows() + 2 != order) {
        throw InvalidParameter("encoder expects the summoning code's X-rows A_1 + A_j");
    }
    Circuit c(code.n_qubits());
    c.set_labels(edge_labels(edges));

    const auto psi = static_cast<std::uint32_t>(edges.index(1, 2));
    for (const std::size_t q : code.logical_x().x_part().support()) {
        if (q != psi) {
            c.cnot(psi, static_cast<std::uint32_t>(q));
        }
    }

    std::vector<bool> touched(code.n_qubits(), false);
    for (const std::size_t q : code.logical_x().x_part().support()) {
        touched[q] = true;
    }
    for (std::size_t j = 2; j <= order - 1; ++j) {
        const gf2::BitVector &row = code.x_rows().row(j - 2);
        const auto control = static_cast<std::uint32_t>(edges.index(j, order));
        if (!row.get(control) || touched[control]) {
            throw InvalidParameter("stage-2 control qubit must be fresh and in the row support");
        }
        c.h(control);
        for (const std::size_t q : row.support()) {
            touched[q] = true;
            if (q != control) {
                c.cnot(control, static_cast<std::uint32_t>(q));
            }
        }
    }
    return c;
}

DecoderLayout decoder_layout(const code::StabilizerCode &code, std::size_t r) {
    DecoderLayout layout;
    layout.vertex = r;
    layout.held = star_qubits(code.edges(), r);
    layout.control = layout.held.front();

    // The flip decision is linear in the outcome vector, so its coefficients
    // are read off the unit outcome vectors.
    const std::size_t n_outcomes = layout.held.size() - 1;
    std::vector<std::uint8_t> outcomes(n_outcomes, 0);
    for (std::size_t i = 0; i < n_outcomes; ++i) {
        outcomes[i] = 1;
        if (resolve_branch(code, r, outcomes).get(0)) {
            layout.correction_outcomes.push_back(static_cast<std::uint32_t>(i));
        }
        outcomes[i] = 0;
    }
    return layout;
}

gf2::BitVector resolve_branch(const code::StabilizerCode &code, std::size_t r,
                              std::span<const std::uint8_t> outcomes) {
    const std::vector<std::uint32_t> held = star_qubits(code.edges(), r);
    const std::size_t m = held.size();
    if (outcomes.size() + 1 != m) {
        throw DimensionMismatch("expected " + std::to_string(m - 1) + " parity outcomes");
    }

    // Candidate with a 0 on the first held qubit; the other is its complement.
    gf2::BitVector candidate(m);
    bool bit = false;
    for (std::size_t i = 0; i + 1 < m; ++i) {
        bit = bit != (outcomes[i] != 0);
        candidate.set(i + 1, bit);
    }
    const gf2::BitVector complement = candidate ^ gf2::BitVector::ones(m);

    const std::vector<std::size_t> cols(held.begin(), held.end());
    const gf2::RowSpace branches(code.c2().select_columns(cols));
    const bool first = branches.contains(candidate);
    const bool second = branches.contains(complement);
    if (first == second) {
        throw CorruptedState(first ? "parity outcomes match both codeword branches"
                                   : "parity outcomes match no codeword branch");
    }
    return first ? candidate : complement;
}

Circuit synth_decoder(const code::StabilizerCode &code, std::size_t r) {
    const DecoderLayout layout = decoder_layout(code, r);
    Circuit c(code.n_qubits());
    c.set_labels(edge_labels(code.edges()));

    const std::size_t n = code.n_qubits();
    for (std::size_t i = 0; i + 1 < layout.held.size(); ++i) {
        gf2::BitVector z(n);
        z.set(layout.held[i]);
        z.set(layout.held[i + 1]);
        c.measure(code::PauliOperator::z_type(std::move(z)));
    }
    for (const auto bit : layout.correction_outcomes) {
        c.x_if(bit, layout.control);
    }
    for (const auto q : layout.held) {
        if (q != layout.control) {
            c.cnot(layout.control, q);
        }
    }
    return c;
}

Circuit synth_graph_state(const Graph &graph) {
    Circuit c(graph.n_vertices);
    if (!graph.labels.empty()) {
        c.set_labels(graph.labels);
    }
    for (std::size_t v = 0; v < graph.n_vertices; ++v) {
        c.h(static_cast<std::uint32_t>(v));
    }
    for (const auto &[a, b] : graph.edges) {
        c.cz(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
    }
    return c;
}

} // namespace summon::circuits
