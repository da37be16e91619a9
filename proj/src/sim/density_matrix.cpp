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
#include "summon/sim/density_matrix.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "summon/circuits/synth.hpp"
#include "summon/error.hpp"

namespace summon::sim {

DensityMatrix::DensityMatrix(std::size_t n_qubits)
    : n_qubits_(n_qubits), dim_(std::size_t{1} << n_qubits), entries_(dim_ * dim_) {
    if (n_qubits > 12) {
        throw InvalidParameter("density matrices are limited to 12 qubits");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector &psi) {
    DensityMatrix rho(psi.n_qubits());
    rho.add_pure(psi, 1.0);
    return rho;
}

Amplitude DensityMatrix::trace() const {
    Amplitude t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) {
        t += at(i, i);
    }
    return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = r; c < dim_; ++c) {
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) {
                return false;
            }
        }
    }
    return true;
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::MatrixXcd m(dim_, dim_);
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = at(r, c);
        }
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double DensityMatrix::max_abs_diff(const DensityMatrix &other) const {
    if (other.dim_ != dim_) {
        throw DimensionMismatch("density matrices differ in size");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

void DensityMatrix::add_pure(const StateVector &psi, double weight) {
    if (psi.dim() != dim_) {
        throw DimensionMismatch("state size does not match density matrix");
    }
    const auto a = psi.amplitudes();
    for (std::size_t r = 0; r < dim_; ++r) {
        for (std::size_t c = 0; c < dim_; ++c) {
            entries_[r * dim_ + c] += weight * a[r] * std::conj(a[c]);
        }
    }
}

DensityMatrix partial_trace(const StateVector &state, std::span<const std::uint32_t> keep) {
    std::vector<std::uint32_t> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw DimensionMismatch("repeated qubit in partial trace");
    }
    if (!kept.empty() && kept.back() >= state.n_qubits()) {
        throw DimensionMismatch("kept qubit out of range");
    }
    const std::size_t m = kept.size();
    DensityMatrix rho(m);

    std::uint64_t kept_mask = 0;
    for (const auto q : kept) {
        kept_mask |= std::uint64_t{1} << q;
    }
    const std::size_t sub = std::size_t{1} << m;
    std::vector<std::size_t> offsets(sub, 0);
    for (std::size_t k = 0; k < sub; ++k) {
        for (std::size_t b = 0; b < m; ++b) {
            if ((k >> b) & 1U) {
                offsets[k] |= std::size_t{1} << kept[b];
            }
        }
    }
    const auto amps = state.amplitudes();
    for (std::size_t rest = 0; rest < state.dim(); ++rest) {
        if ((rest & kept_mask) != 0) {
            continue;
        }
        for (std::size_t r = 0; r < sub; ++r) {
            const Amplitude ar = amps[rest | offsets[r]];
            if (ar == Amplitude{}) {
                continue;
            }
            for (std::size_t c = 0; c < sub; ++c) {
                rho.at(r, c) += ar * std::conj(amps[rest | offsets[c]]);
            }
        }
    }
    return rho;
}

double fidelity_qubit(const DensityMatrix &rho, const StateVector &psi) {
    if (rho.n_qubits() != 1 || psi.n_qubits() != 1) {
        throw DimensionMismatch("qubit fidelity needs one-qubit operands");
    }
    const auto a = psi.amplitudes();
    Amplitude f{0.0, 0.0};
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            f += std::conj(a[r]) * rho.at(r, c) * a[c];
        }
    }
    return std::clamp(f.real(), 0.0, 1.0);
}

std::vector<gf2::BitVector> enumerate_c2(const code::StabilizerCode &code) {
    const auto &basis = code.c2().rows();
    if (basis.size() > 20) {
        throw InvalidParameter("C2 too large to enumerate");
    }
    std::vector<gf2::BitVector> out;
    out.reserve(std::size_t{1} << basis.size());
    for (std::size_t mask = 0; mask < (std::size_t{1} << basis.size()); ++mask) {
        gf2::BitVector v(code.n_qubits());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            if ((mask >> b) & 1U) {
                v ^= basis[b];
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

DensityMatrix branch_mixture(const code::StabilizerCode &code, std::size_t r, Amplitude alpha,
                             Amplitude beta) {
    const circuits::DecoderLayout layout = circuits::decoder_layout(code, r);
    const std::size_t m = layout.held.size();
    if (m > 10) {
        throw InvalidParameter("branch mixture limited to 10 held qubits");
    }
    const auto elements = enumerate_c2(code);
    DensityMatrix rho(m);
    const std::size_t all_ones = (std::size_t{1} << m) - 1;
    const double weight = 1.0 / static_cast<double>(elements.size());
    for (const auto &x : elements) {
        std::size_t index = 0;
        for (std::size_t k = 0; k < m; ++k) {
            if (x.get(layout.held[k])) {
                index |= std::size_t{1} << k;
            }
        }
        std::vector<Amplitude> amps(std::size_t{1} << m);
        amps[index] += alpha;
        amps[index ^ all_ones] += beta;
        rho.add_pure(StateVector::from_amplitudes(std::move(amps)), weight);
    }
    return rho;
}

bool codeword_mixture_check(const DensityMatrix &rho_r, const code::StabilizerCode &code,
                            std::size_t r, Amplitude alpha, Amplitude beta, double tol) {
    return rho_r.max_abs_diff(branch_mixture(code, r, alpha, beta)) <= tol;
}

} // namespace summon::sim
