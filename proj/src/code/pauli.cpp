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
#include "summon/code/pauli.hpp"

#include <utility>

#include "summon/error.hpp"

namespace summon::code {

PauliOperator::PauliOperator(gf2::BitVector z_part, gf2::BitVector x_part)
    : z_(std::move(z_part)), x_(std::move(x_part)) {
    if (z_.size() != x_.size()) {
        throw DimensionMismatch("Z and X parts of a Pauli operator differ in length");
    }
}

PauliOperator PauliOperator::z_type(gf2::BitVector z_part) {
    const std::size_t n = z_part.size();
    return {std::move(z_part), gf2::BitVector(n)};
}

PauliOperator PauliOperator::x_type(gf2::BitVector x_part) {
    const std::size_t n = x_part.size();
    return {gf2::BitVector(n), std::move(x_part)};
}

PauliOperator PauliOperator::from_string(std::string_view letters) {
    PauliOperator p(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        switch (letters[i]) {
        case 'I':
            break;
        case 'X':
            p.x_.set(i);
            break;
        case 'Z':
            p.z_.set(i);
            break;
        case 'Y':
            p.x_.set(i);
            p.z_.set(i);
            break;
        default:
            throw InvalidParameter(std::string("unknown Pauli letter '") + letters[i] + "'");
        }
    }
    return p;
}

std::size_t PauliOperator::weight() const { return support().weight(); }

gf2::BitVector PauliOperator::support() const {
    gf2::BitVector s = z_;
    auto sw = s.words();
    const auto xw = x_.words();
    for (std::size_t i = 0; i < sw.size(); ++i) {
        sw[i] |= xw[i];
    }
    return s;
}

std::string PauliOperator::to_string() const {
    std::string s(n_qubits(), 'I');
    for (std::size_t i = 0; i < n_qubits(); ++i) {
        const bool z = z_.get(i);
        const bool x = x_.get(i);
        if (z && x) {
            s[i] = 'Y';
        } else if (z) {
            s[i] = 'Z';
        } else if (x) {
            s[i] = 'X';
        }
    }
    return s;
}

PauliOperator &PauliOperator::operator*=(const PauliOperator &other) {
    z_ ^= other.z_;
    x_ ^= other.x_;
    return *this;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw DimensionMismatch("Pauli operators act on different qubit counts");
    }
    return gf2::dot(p.z_part(), q.x_part()) == gf2::dot(p.x_part(), q.z_part());
}

} // namespace summon::code
