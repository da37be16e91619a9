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
#include "summon/sim/state_vector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "summon/error.hpp"

namespace summon::sim {
namespace {

void require_qubits(std::size_t n) {
    if (n > kMaxQubits) {
        throw InvalidParameter(std::to_string(n) + " qubits exceed the dense simulator limit of " +
                               std::to_string(kMaxQubits));
    }
}

template <typename T> void put_le(std::ostream &out, T value) {
    std::array<char, sizeof(T)> bytes{};
    for (std::size_t b = 0; b < sizeof(T); ++b) {
        bytes[b] = static_cast<char>((value >> (8 * b)) & 0xff);
    }
    out.write(bytes.data(), bytes.size());
}

template <typename T> T get_le(std::istream &in) {
    std::array<char, sizeof(T)> bytes{};
    if (!in.read(bytes.data(), bytes.size())) {
        throw InvalidParameter("truncated state dump");
    }
    T value = 0;
    for (std::size_t b = 0; b < sizeof(T); ++b) {
        value |= static_cast<T>(static_cast<unsigned char>(bytes[b])) << (8 * b);
    }
    return value;
}

} // namespace

PauliMasks to_masks(const code::PauliOperator &p) {
    if (p.n_qubits() > 64) {
        throw InvalidParameter("Pauli operator too wide for a statevector mask");
    }
    PauliMasks m;
    const auto z = p.z_part().words();
    const auto x = p.x_part().words();
    m.z = z.empty() ? 0 : z[0];
    m.x = x.empty() ? 0 : x[0];
    m.n_y = static_cast<unsigned>(std::popcount(m.x & m.z));
    return m;
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    require_qubits(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw DimensionMismatch("amplitude count must be a power of two");
    }
    StateVector s(0);
    s.n_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes.size()));
    require_qubits(s.n_qubits_);
    s.amps_ = std::move(amplitudes);
    return s;
}

StateVector StateVector::with_qubit(std::size_t n_qubits, std::size_t q, Amplitude alpha,
                                    Amplitude beta) {
    StateVector s(n_qubits);
    s.check_qubit(q);
    s.amps_[0] = alpha;
    s.amps_[std::size_t{1} << q] = beta;
    return s;
}

void StateVector::check_qubit(std::size_t q) const {
    if (q >= n_qubits_) {
        throw DimensionMismatch("qubit " + std::to_string(q) + " out of range for " +
                                std::to_string(n_qubits_) + "-qubit state");
    }
}

void StateVector::check_pauli(const code::PauliOperator &p) const {
    if (p.n_qubits() != n_qubits_) {
        throw DimensionMismatch("Pauli operator size does not match the state");
    }
}

void StateVector::h(std::size_t q) {
    check_qubit(q);
    kernels().hadamard(amps_.data(), amps_.size(), static_cast<unsigned>(q));
}

void StateVector::x(std::size_t q) {
    check_qubit(q);
    kernels().controlled_flip(amps_.data(), amps_.size(), 0, static_cast<unsigned>(q));
}

void StateVector::z(std::size_t q) {
    check_qubit(q);
    kernels().phase_flip(amps_.data(), amps_.size(), std::uint64_t{1} << q);
}

void StateVector::cnot(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw InvalidParameter("CNOT control equals target");
    }
    kernels().controlled_flip(amps_.data(), amps_.size(), std::uint64_t{1} << control,
                              static_cast<unsigned>(target));
}

void StateVector::cz(std::size_t a, std::size_t b) {
    check_qubit(a);
    check_qubit(b);
    if (a == b) {
        throw InvalidParameter("CZ on a single qubit");
    }
    kernels().phase_flip(amps_.data(), amps_.size(), (std::uint64_t{1} << a) | (std::uint64_t{1} << b));
}

void StateVector::apply_pauli(const code::PauliOperator &p) {
    check_pauli(p);
    const PauliMasks m = to_masks(p);
    std::vector<Amplitude> out(amps_.size());
    kernels().apply_pauli(out.data(), amps_.data(), amps_.size(), m.x, m.z, m.n_y);
    amps_ = std::move(out);
}

double StateVector::norm_sq() const { return kernels().norm_sq(amps_.data(), amps_.size()); }

double StateVector::expectation(const code::PauliOperator &p) const {
    check_pauli(p);
    const PauliMasks m = to_masks(p);
    if (m.x == 0) {
        return kernels().parity_expectation(amps_.data(), amps_.size(), m.z);
    }
    return kernels().pauli_expectation(amps_.data(), amps_.size(), m.x, m.z, m.n_y).real();
}

double StateVector::probability_plus(const code::PauliOperator &p) const {
    return std::clamp((1.0 + expectation(p)) / 2.0, 0.0, 1.0);
}

void StateVector::project(const code::PauliOperator &p, unsigned outcome_bit) {
    const double p_plus = probability_plus(p);
    const double prob = outcome_bit == 0 ? p_plus : 1.0 - p_plus;
    if (prob <= 0.0) {
        throw CorruptedState("projection onto a zero-probability measurement branch");
    }
    const double scale = 1.0 / std::sqrt(prob);
    const PauliMasks m = to_masks(p);
    if (m.x == 0) {
        kernels().parity_project(amps_.data(), amps_.size(), m.z, outcome_bit, scale);
        return;
    }
    // (I ± P)/2 applied, then renormalized.
    std::vector<Amplitude> flipped(amps_.size());
    kernels().apply_pauli(flipped.data(), amps_.data(), amps_.size(), m.x, m.z, m.n_y);
    const double sign = outcome_bit == 0 ? 1.0 : -1.0;
    const double half_scale = 0.5 * scale;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        amps_[i] = (amps_[i] + sign * flipped[i]) * half_scale;
    }
}

Amplitude StateVector::inner(const StateVector &other) const {
    if (other.dim() != dim()) {
        throw DimensionMismatch("inner product of states with different sizes");
    }
    Amplitude acc{0.0, 0.0};
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::conj(amps_[i]) * other.amps_[i];
    }
    return acc;
}

double expectation(const StateVector &state, const code::PauliOperator &p) {
    return state.expectation(p);
}

void write_state_dump(std::ostream &out, const StateVector &state) {
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(state.n_qubits()));
    for (const Amplitude &a : state.amplitudes()) {
        put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(a.real()));
        put_le<std::uint64_t>(out, std::bit_cast<std::uint64_t>(a.imag()));
    }
}

StateVector read_state_dump(std::istream &in) {
    const auto n = get_le<std::uint32_t>(in);
    require_qubits(n);
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (auto &a : amps) {
        const double re = std::bit_cast<double>(get_le<std::uint64_t>(in));
        const double im = std::bit_cast<double>(get_le<std::uint64_t>(in));
        a = {re, im};
    }
    return StateVector::from_amplitudes(std::move(amps));
}

} // namespace summon::sim
