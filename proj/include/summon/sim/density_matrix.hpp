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
#include <cstdint>
#include <span>
#include <vector>

#include "summon/code/stabilizer_code.hpp"
#include "summon/sim/state_vector.hpp"

namespace summon::sim {

/// Small dense density matrix, row-major. Index bit k is the k-th qubit of
/// whatever ordering produced it.
class DensityMatrix {
  public:
    explicit DensityMatrix(std::size_t n_qubits);
    static DensityMatrix pure(const StateVector &psi);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] Amplitude at(std::size_t row, std::size_t col) const {
        return entries_.at(row * dim_ + col);
    }
    Amplitude &at(std::size_t row, std::size_t col) { return entries_.at(row * dim_ + col); }

    [[nodiscard]] Amplitude trace() const;
    [[nodiscard]] bool is_hermitian(double tol) const;
    [[nodiscard]] double min_eigenvalue() const;
    /// Largest entrywise |a - b|.
    [[nodiscard]] double max_abs_diff(const DensityMatrix &other) const;

    /// this += weight |psi⟩⟨psi|.
    void add_pure(const StateVector &psi, double weight);

  private:
    std::size_t n_qubits_;
    std::size_t dim_;
    std::vector<Amplitude> entries_;
};

/// Reduced state on `keep` (sorted ascending; index bit k ↔ keep[k]).
/// Throws DimensionMismatch for out-of-range or repeated qubits.
DensityMatrix partial_trace(const StateVector &state, std::span<const std::uint32_t> keep);

/// ⟨ψ|ρ|ψ⟩ for one-qubit ρ and ψ.
double fidelity_qubit(const DensityMatrix &rho, const StateVector &psi);

/// Uniform mixture over x ∈ C2 of α|x_r⟩ + β|1 + x_r⟩ on the star qubits of
/// r (held order): the reduced state the reveal agent sees after erasure.
/// Throws InvalidParameter beyond 10 held qubits.
DensityMatrix branch_mixture(const code::StabilizerCode &code, std::size_t r, Amplitude alpha,
                             Amplitude beta);

/// max |ρ_r - branch_mixture| <= tol.
bool codeword_mixture_check(const DensityMatrix &rho_r, const code::StabilizerCode &code,
                            std::size_t r, Amplitude alpha, Amplitude beta, double tol = 1e-10);

/// All 2^dim(C2) elements of C2.
std::vector<gf2::BitVector> enumerate_c2(const code::StabilizerCode &code);

} // namespace summon::sim
