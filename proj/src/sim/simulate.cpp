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
#include "summon/sim/simulate.hpp"

#include <algorithm>
#include <optional>

#include "summon/error.hpp"
#include "summon/sim/rng.hpp"

namespace summon::sim {
namespace {

using circuits::GateKind;

CircuitRun run(const StateVector &input, const circuits::Circuit &c, std::uint64_t seed,
               std::optional<std::span<const std::uint8_t>> forced) {
    if (input.n_qubits() != c.n_qubits()) {
        throw DimensionMismatch("circuit has " + std::to_string(c.n_qubits()) +
                                " qubits, state has " + std::to_string(input.n_qubits()));
    }
    CircuitRun out{input, {}};
    out.record.rng_seed = seed;
    CounterRng rng(seed);
    std::vector<std::uint8_t> cbits(c.n_cbits(), 0);
    std::vector<bool> written(c.n_cbits(), false);
    std::size_t n_measured = 0;

    auto read_bit = [&](const circuits::Gate &g) {
        const std::uint32_t b = g.cbit.value();
        if (!written.at(b)) {
            throw ClassicalBitError("classical bit c" + std::to_string(b) + " read before write");
        }
        return cbits[b] != 0;
    };

    StateVector &s = out.state;
    for (const auto &g : c.gates()) {
        switch (g.kind) {
        case GateKind::kH:
            s.h(g.qubits[0]);
            break;
        case GateKind::kX:
            s.x(g.qubits[0]);
            break;
        case GateKind::kZ:
            s.z(g.qubits[0]);
            break;
        case GateKind::kCnot:
            s.cnot(g.qubits[0], g.qubits[1]);
            break;
        case GateKind::kCz:
            s.cz(g.qubits[0], g.qubits[1]);
            break;
        case GateKind::kXIf:
            if (read_bit(g)) {
                s.x(g.qubits[0]);
            }
            break;
        case GateKind::kZIf:
            if (read_bit(g)) {
                s.z(g.qubits[0]);
            }
            break;
        case GateKind::kMeasurePauli: {
            const auto &p = g.pauli.value();
            const double p_plus = std::clamp(s.probability_plus(p), 0.0, 1.0);
            unsigned bit = 0;
            if (forced) {
                if (n_measured >= forced->size()) {
                    throw InvalidParameter("not enough forced outcomes");
                }
                bit = (*forced)[n_measured] != 0 ? 1U : 0U;
            } else {
                bit = rng.next_unit() < p_plus ? 0U : 1U;
            }
            s.project(p, bit);
            const std::uint32_t b = g.cbit.value();
            cbits.at(b) = static_cast<std::uint8_t>(bit);
            written[b] = true;
            out.record.outcomes.push_back(bit == 0 ? 1 : -1);
            out.record.probabilities.push_back(bit == 0 ? p_plus : 1.0 - p_plus);
            ++n_measured;
            break;
        }
        }
    }
    return out;
}

} // namespace

std::vector<std::uint8_t> MeasurementRecord::bits() const {
    std::vector<std::uint8_t> b;
    b.reserve(outcomes.size());
    for (const int o : outcomes) {
        b.push_back(o < 0 ? 1 : 0);
    }
    return b;
}

CircuitRun apply_circuit(const StateVector &state, const circuits::Circuit &c,
                         std::uint64_t seed) {
    return run(state, c, seed, std::nullopt);
}

CircuitRun apply_circuit_forced(const StateVector &state, const circuits::Circuit &c,
                                std::span<const std::uint8_t> forced) {
    return run(state, c, 0, forced);
}

} // namespace summon::sim
