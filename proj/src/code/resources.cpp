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
#include "summon/code/resources.hpp"

#include "summon/circuits/synth.hpp"
#include "summon/code/cws_code.hpp"
#include "summon/code/stabilizer_code.hpp"
#include "summon/error.hpp"

namespace summon::code {

ResourceCounts resource_counts(std::size_t n) {
    if (n < 3) {
        throw InvalidParameter("resource comparison needs N >= 3");
    }
    ResourceCounts rc;
    rc.n = n;
    rc.n_tilde = even_order(n);

    const StabilizerCode css = build_css(rc.n_tilde);
    const auto css_counts = circuits::gate_count(circuits::synth_encoder(css));
    rc.q_css = css.n_qubits();
    rc.css_h = css_counts[circuits::GateKind::kH];
    rc.css_cnot = css_counts[circuits::GateKind::kCnot];

    const CwsCode cws = build_cws(n);
    const auto cws_counts = circuits::gate_count(circuits::synth_graph_state(cws.graph));
    rc.q_cws = cws.vertices.size();
    rc.cws_h = cws_counts[circuits::GateKind::kH];
    rc.cws_cz = cws_counts[circuits::GateKind::kCz];
    rc.cws_word_cz = cws.word_operators.back().weight();
    return rc;
}

} // namespace summon::code
