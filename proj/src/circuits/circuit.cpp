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
#include "summon/circuits/circuit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "summon/error.hpp"

namespace summon::circuits {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::kH:
        return "H";
    case GateKind::kCnot:
        return "CNOT";
    case GateKind::kCz:
        return "CZ";
    case GateKind::kX:
        return "X";
    case GateKind::kZ:
        return "Z";
    case GateKind::kMeasurePauli:
        return "MPP";
    case GateKind::kXIf:
        return "X?";
    case GateKind::kZIf:
        return "Z?";
    }
    return "?";
}

std::size_t GateCounts::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::size_t GateCounts::unitary_total() const {
    return (*this)[GateKind::kH] + (*this)[GateKind::kCnot] + (*this)[GateKind::kCz] +
           (*this)[GateKind::kX] + (*this)[GateKind::kZ];
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

void Circuit::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != n_qubits_) {
        throw DimensionMismatch("one label per qubit required");
    }
    labels_ = std::move(labels);
}

void Circuit::check_qubit(std::uint32_t q) const {
    if (q >= n_qubits_) {
        throw InvalidParameter("qubit " + std::to_string(q) + " out of range for " +
                               std::to_string(n_qubits_) + "-qubit circuit");
    }
}

void Circuit::append(Gate gate) {
    switch (gate.kind) {
    case GateKind::kH:
    case GateKind::kX:
    case GateKind::kZ:
        if (gate.qubits.size() != 1) {
            throw InvalidParameter("single-qubit gate needs exactly one qubit");
        }
        break;
    case GateKind::kCnot:
    case GateKind::kCz:
        if (gate.qubits.size() != 2 || gate.qubits[0] == gate.qubits[1]) {
            throw InvalidParameter("two-qubit gate needs two distinct qubits");
        }
        break;
    case GateKind::kMeasurePauli: {
        if (!gate.pauli || gate.pauli->n_qubits() != n_qubits_) {
            throw InvalidParameter("measurement needs an observable over all circuit qubits");
        }
        if (gate.pauli->is_identity()) {
            throw InvalidParameter("cannot measure the identity");
        }
        gate.qubits.clear();
        for (const std::size_t q : gate.pauli->support().support()) {
            gate.qubits.push_back(static_cast<std::uint32_t>(q));
        }
        if (gate.cbit && *gate.cbit != n_cbits_) {
            throw InvalidParameter("measurements write classical bits in order");
        }
        gate.cbit = static_cast<std::uint32_t>(n_cbits_);
        ++n_cbits_;
        break;
    }
    case GateKind::kXIf:
    case GateKind::kZIf:
        if (gate.qubits.size() != 1) {
            throw InvalidParameter("conditioned gate needs exactly one qubit");
        }
        if (!gate.cbit || *gate.cbit >= n_cbits_) {
            throw ClassicalBitError("conditioned gate reads a classical bit before it is written");
        }
        break;
    }
    for (const auto q : gate.qubits) {
        check_qubit(q);
    }
    gates_.push_back(std::move(gate));
}

void Circuit::h(std::uint32_t q) { append({GateKind::kH, {q}, std::nullopt, std::nullopt}); }
void Circuit::x(std::uint32_t q) { append({GateKind::kX, {q}, std::nullopt, std::nullopt}); }
void Circuit::z(std::uint32_t q) { append({GateKind::kZ, {q}, std::nullopt, std::nullopt}); }

void Circuit::cnot(std::uint32_t control, std::uint32_t target) {
    append({GateKind::kCnot, {control, target}, std::nullopt, std::nullopt});
}

void Circuit::cz(std::uint32_t a, std::uint32_t b) {
    append({GateKind::kCz, {a, b}, std::nullopt, std::nullopt});
}

std::uint32_t Circuit::measure(const code::PauliOperator &observable) {
    append({GateKind::kMeasurePauli, {}, std::nullopt, observable});
    return gates_.back().cbit.value();
}

void Circuit::x_if(std::uint32_t cbit, std::uint32_t q) {
    append({GateKind::kXIf, {q}, cbit, std::nullopt});
}

void Circuit::z_if(std::uint32_t cbit, std::uint32_t q) {
    append({GateKind::kZIf, {q}, cbit, std::nullopt});
}

std::vector<std::uint32_t> Circuit::touched_qubits() const {
    std::set<std::uint32_t> seen;
    for (const auto &g : gates_) {
        seen.insert(g.qubits.begin(), g.qubits.end());
    }
    return {seen.begin(), seen.end()};
}

GateCounts gate_count(const Circuit &c) {
    GateCounts counts;
    for (const auto &g : c.gates()) {
        counts.add(g.kind);
    }
    return counts;
}

} // namespace summon::circuits
