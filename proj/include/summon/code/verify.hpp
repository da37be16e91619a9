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
#include <optional>
#include <string>
#include <vector>

#include "summon/code/pauli.hpp"
#include "summon/code/stabilizer_code.hpp"

namespace summon::code {

/// p lies in the stabilizer group S (up to phase). Uses the CSS block split:
/// Z-part in span(Z-rows) and X-part in span(X-rows).
bool in_stabilizer(const PauliOperator &p, const StabilizerCode &code);

/// p commutes with every generator.
bool in_centralizer(const PauliOperator &p, const StabilizerCode &code);

/// p ∈ C(S) \ S.
bool is_nontrivial_logical(const PauliOperator &p, const StabilizerCode &code);

/// Qubits of K_n not adjacent to vertex r (the complement of r's star).
gf2::BitVector non_star_edges(std::size_t n, std::size_t r);

/// A Pauli in C(S) \ S supported inside `erased`, if one exists. Computed as
/// the kernel of the symplectic form restricted to the erased coordinates,
/// followed by a span test against S.
std::optional<PauliOperator> logical_supported_on(const StabilizerCode &code,
                                                  const gf2::BitVector &erased);

/// The code recovers from losing exactly the qubits in `erased`.
bool erasure_correctable_on(const StabilizerCode &code, const gf2::BitVector &erased);

/// The code recovers from losing every qubit not adjacent to vertex r.
/// Requires a code with an edge labelling; r is 1-based.
bool erasure_correctable(const StabilizerCode &code, std::size_t r);

struct DistanceResult {
    /// Exact distance when `exact`, otherwise a lower bound (searched + 1).
    std::size_t value = 0;
    bool exact = false;
    /// Largest support size fully searched.
    std::size_t searched_weight = 0;
    /// Minimum-weight nontrivial logical when `exact`.
    std::optional<PauliOperator> witness;
};

/// Minimum weight over C(S) \ S, searching supports of size 1..max_weight.
/// Each support is checked for Z-type and X-type logicals separately, which
/// is complete for CSS codes.
DistanceResult distance(const StabilizerCode &code, std::size_t max_weight);

/// Z on q_{12}, q_{34}, ..., q_{Ñ-1,Ñ}: weight Ñ/2, in C(S) \ S for the
/// summoning code.
PauliOperator pairing_witness(std::size_t n_tilde);

bool generators_commute(const StabilizerCode &code);

/// Logicals commute with every generator and anti-commute with each other.
bool logicals_valid(const StabilizerCode &code);

/// Number of encoded qubits implied by the generator rank.
std::size_t logical_qubit_count(const StabilizerCode &code);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    /// Run the exact distance search only up to this Ñ.
    std::size_t exact_distance_max_order = 8;
    /// Weight explored when the exact search is skipped.
    std::size_t fallback_search_weight = 2;
};

/// Every structural claim about the summoning code: commutation, rank,
/// logical operators, erasure recovery for each vertex and distance.
std::vector<Check> verify_summoning_code(const StabilizerCode &code,
                                         const VerifyOptions &options = {});

} // namespace summon::code
