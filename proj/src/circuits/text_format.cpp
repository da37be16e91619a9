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
#include "summon/circuits/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "summon/error.hpp"

namespace summon::circuits {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
            ++pos;
        }
        const std::size_t start = pos;
        while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') {
            ++pos;
        }
        if (pos > start) {
            words.push_back(line.substr(start, pos - start));
        }
    }
    return words;
}

std::uint32_t parse_number(std::string_view s, std::string_view what) {
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw InvalidParameter("bad " + std::string(what) + " '" + std::string(s) + "'");
    }
    return value;
}

std::uint32_t parse_ref(std::string_view s, char prefix) {
    if (s.size() < 2 || s.front() != prefix) {
        throw InvalidParameter("expected " + std::string(1, prefix) + "<n>, got '" +
                               std::string(s) + "'");
    }
    return parse_number(s.substr(1), "index");
}

} // namespace

std::string to_text(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.n_qubits() << '\n';
    out << "cbits " << c.n_cbits() << '\n';
    for (std::size_t q = 0; q < c.labels().size(); ++q) {
        out << "label q" << q << " = " << c.labels()[q] << '\n';
    }
    for (const auto &g : c.gates()) {
        switch (g.kind) {
        case GateKind::kH:
        case GateKind::kX:
        case GateKind::kZ:
            out << gate_name(g.kind) << " q" << g.qubits[0] << '\n';
            break;
        case GateKind::kCnot:
        case GateKind::kCz:
            out << gate_name(g.kind) << " q" << g.qubits[0] << " q" << g.qubits[1] << '\n';
            break;
        case GateKind::kMeasurePauli: {
            out << "MPP";
            const std::string letters = g.pauli->to_string();
            for (const auto q : g.qubits) {
                out << ' ' << letters[q] << " q" << q;
            }
            out << " -> c" << *g.cbit << '\n';
            break;
        }
        case GateKind::kXIf:
        case GateKind::kZIf:
            out << gate_name(g.kind) << " c" << *g.cbit << " q" << g.qubits[0] << '\n';
            break;
        }
    }
    return out.str();
}

Circuit from_text(std::string_view text) {
    std::optional<Circuit> circuit;
    std::optional<std::size_t> declared_cbits;
    std::vector<std::string> labels;

    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        const std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;

        const auto w = split_words(line);
        if (w.empty()) {
            continue;
        }
        const auto fail = [&](const std::string &msg) {
            throw InvalidParameter("line " + std::to_string(line_no) + ": " + msg);
        };
        if (w[0] == "qubits") {
            if (circuit || w.size() != 2) {
                fail("'qubits' must appear once, first");
            }
            circuit.emplace(parse_number(w[1], "qubit count"));
            labels.resize(circuit->n_qubits());
            continue;
        }
        if (!circuit) {
            fail("missing 'qubits' header");
        }
        if (w[0] == "cbits") {
            if (w.size() != 2) {
                fail("malformed 'cbits'");
            }
            declared_cbits = parse_number(w[1], "cbit count");
        } else if (w[0] == "label") {
            if (w.size() != 4 || w[2] != "=") {
                fail("malformed label");
            }
            const auto q = parse_ref(w[1], 'q');
            if (q >= labels.size()) {
                fail("label for unknown qubit");
            }
            labels[q] = std::string(w[3]);
        } else if (w[0] == "H" || w[0] == "X" || w[0] == "Z") {
            if (w.size() != 2) {
                fail("single-qubit gate takes one operand");
            }
            const auto q = parse_ref(w[1], 'q');
            if (w[0] == "H") {
                circuit->h(q);
            } else if (w[0] == "X") {
                circuit->x(q);
            } else {
                circuit->z(q);
            }
        } else if (w[0] == "CNOT" || w[0] == "CZ") {
            if (w.size() != 3) {
                fail("two-qubit gate takes two operands");
            }
            const auto a = parse_ref(w[1], 'q');
            const auto b = parse_ref(w[2], 'q');
            if (w[0] == "CNOT") {
                circuit->cnot(a, b);
            } else {
                circuit->cz(a, b);
            }
        } else if (w[0] == "MPP") {
            if (w.size() < 5 || w.size() % 2 == 0 || w[w.size() - 2] != "->") {
                fail("malformed MPP");
            }
            std::string letters(circuit->n_qubits(), 'I');
            for (std::size_t k = 1; k + 2 < w.size(); k += 2) {
                const auto q = parse_ref(w[k + 1], 'q');
                if (w[k].size() != 1 || q >= letters.size() || letters[q] != 'I') {
                    fail("bad MPP factor");
                }
                letters[q] = w[k][0];
            }
            const auto cbit = parse_ref(w.back(), 'c');
            if (cbit != circuit->n_cbits()) {
                fail("MPP must write the next classical bit");
            }
            circuit->measure(code::PauliOperator::from_string(letters));
        } else if (w[0] == "X?" || w[0] == "Z?") {
            if (w.size() != 3) {
                fail("conditioned gate takes c<k> q<i>");
            }
            const auto cbit = parse_ref(w[1], 'c');
            const auto q = parse_ref(w[2], 'q');
            if (w[0] == "X?") {
                circuit->x_if(cbit, q);
            } else {
                circuit->z_if(cbit, q);
            }
        } else {
            fail("unknown instruction '" + std::string(w[0]) + "'");
        }
    }
    if (!circuit) {
        throw InvalidParameter("empty circuit text");
    }
    if (declared_cbits && *declared_cbits != circuit->n_cbits()) {
        throw InvalidParameter("declared cbit count does not match measurements");
    }
    const bool any_label = std::any_of(labels.begin(), labels.end(),
                                       [](const std::string &l) { return !l.empty(); });
    if (any_label) {
        circuit->set_labels(std::move(labels));
    }
    return std::move(*circuit);
}

} // namespace summon::circuits
