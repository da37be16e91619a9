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
#include "summon/code/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "summon/error.hpp"

namespace summon::code {
namespace {

void require_size(const PauliOperator &p, const StabilizerCode &code) {
    if (p.n_qubits() != code.n_qubits()) {
        throw DimensionMismatch("operator size " + std::to_string(p.n_qubits()) +
                                " does not match code size " + std::to_string(code.n_qubits()));
    }
}

gf2::BitVector symplectic_row(const PauliOperator &p) {
    const std::size_t n = p.n_qubits();
    gf2::BitVector row(2 * n);
    for (const std::size_t i : p.z_part().support()) {
        row.set(i);
    }
    for (const std::size_t i : p.x_part().support()) {
        row.set(n + i);
    }
    return row;
}

// Searches one Pauli type on a fixed support. `checks` holds the columns of
// the generator block the candidate must be orthogonal to; `span` is the row
// space the candidate must escape to be a logical. Returns the support mask
// (bits index into `support`) of a logical, or 0.
std::uint64_t logical_on_support(const std::vector<gf2::BitVector> &checks,
                                 const gf2::RowSpace &span, const std::vector<std::size_t> &support,
                                 std::size_t n_qubits) {
    // Column elimination that tracks which support positions were combined.
    std::vector<gf2::BitVector> reduced;
    std::vector<std::uint64_t> combos;
    std::vector<std::size_t> lead;
    for (std::size_t k = 0; k < support.size(); ++k) {
        gf2::BitVector col = checks[support[k]];
        std::uint64_t combo = std::uint64_t{1} << k;
        for (std::size_t b = 0; b < reduced.size(); ++b) {
            if (col.get(lead[b])) {
                col ^= reduced[b];
                combo ^= combos[b];
            }
        }
        if (col.is_zero()) {
            gf2::BitVector candidate(n_qubits);
            for (std::uint64_t bits = combo; bits != 0; bits &= bits - 1) {
                candidate.set(support[static_cast<std::size_t>(std::countr_zero(bits))]);
            }
            if (!span.contains(candidate)) {
                return combo;
            }
            continue;
        }
        lead.push_back(col.support().front());
        reduced.push_back(std::move(col));
        combos.push_back(combo);
    }
    return 0;
}

// Advances a k-subset of [0, n) in lexicographic order; false when exhausted.
bool next_combination(std::vector<std::size_t> &idx, std::size_t n) {
    const std::size_t k = idx.size();
    for (std::size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

} // namespace

bool in_stabilizer(const PauliOperator &p, const StabilizerCode &code) {
    require_size(p, code);
    return gf2::in_span(p.z_part(), code.z_rows()) && gf2::in_span(p.x_part(), code.x_rows());
}

bool in_centralizer(const PauliOperator &p, const StabilizerCode &code) {
    require_size(p, code);
    const auto gens = code.generators();
    return std::all_of(gens.begin(), gens.end(),
                       [&](const PauliOperator &g) { return commutes(p, g); });
}

bool is_nontrivial_logical(const PauliOperator &p, const StabilizerCode &code) {
    return in_centralizer(p, code) && !in_stabilizer(p, code);
}

gf2::BitVector non_star_edges(std::size_t n, std::size_t r) {
    const gf2::EdgeIndexMap edges(n);
    if (r < 1 || r > n) {
        throw InvalidParameter("vertex " + std::to_string(r) + " outside [1, " +
                               std::to_string(n) + "]");
    }
    gf2::BitVector out(edges.edge_count());
    for (std::size_t e = 0; e < edges.edge_count(); ++e) {
        const auto [i, j] = edges.edge(e);
        if (i != r && j != r) {
            out.set(e);
        }
    }
    return out;
}

std::optional<PauliOperator> logical_supported_on(const StabilizerCode &code,
                                                  const gf2::BitVector &erased) {
    const std::size_t n = code.n_qubits();
    if (erased.size() != n) {
        throw DimensionMismatch("erasure mask does not match code size");
    }
    const std::vector<std::size_t> coords = erased.support();
    const std::size_t m = coords.size();

    // Unknowns (z_E, x_E). Generator (g_z, g_x) commutes with P iff
    // z·g_x + x·g_z = 0, giving the row [g_x|_E , g_z|_E].
    gf2::BitMatrix constraints(2 * m);
    for (const auto &g : code.generators()) {
        gf2::BitVector row(2 * m);
        for (std::size_t k = 0; k < m; ++k) {
            if (g.x_part().get(coords[k])) {
                row.set(k);
            }
            if (g.z_part().get(coords[k])) {
                row.set(m + k);
            }
        }
        constraints.append_row(std::move(row));
    }
    const gf2::RowSpace stabilizer(code.h());
    const gf2::BitMatrix solutions = gf2::kernel(constraints);
    for (const auto &sol : solutions.rows()) {
        gf2::BitVector z(n);
        gf2::BitVector x(n);
        for (std::size_t k = 0; k < m; ++k) {
            if (sol.get(k)) {
                z.set(coords[k]);
            }
            if (sol.get(m + k)) {
                x.set(coords[k]);
            }
        }
        PauliOperator candidate(std::move(z), std::move(x));
        if (!stabilizer.contains(symplectic_row(candidate))) {
            return candidate;
        }
    }
    return std::nullopt;
}

bool erasure_correctable_on(const StabilizerCode &code, const gf2::BitVector &erased) {
    return !logical_supported_on(code, erased).has_value();
}

bool erasure_correctable(const StabilizerCode &code, std::size_t r) {
    return erasure_correctable_on(code, non_star_edges(code.edges().vertex_count(), r));
}

DistanceResult distance(const StabilizerCode &code, std::size_t max_weight) {
    const std::size_t n = code.n_qubits();
    if (max_weight > 63) {
        throw InvalidParameter("distance search weight limited to 63");
    }
    // Z-type candidates must be orthogonal to the X-rows and escape span(Z-rows);
    // X-type candidates the other way round.
    const auto z_checks = code.x_rows().transpose().rows();
    const auto x_checks = code.z_rows().transpose().rows();
    const gf2::RowSpace z_span(code.z_rows());
    const gf2::RowSpace x_span(code.x_rows());

    DistanceResult result;
    for (std::size_t w = 1; w <= std::min(max_weight, n); ++w) {
        std::vector<std::size_t> support(w);
        std::iota(support.begin(), support.end(), std::size_t{0});
        do {
            for (const bool z_type : {true, false}) {
                const std::uint64_t combo =
                    z_type ? logical_on_support(z_checks, z_span, support, n)
                           : logical_on_support(x_checks, x_span, support, n);
                if (combo == 0) {
                    continue;
                }
                gf2::BitVector part(n);
                for (std::uint64_t bits = combo; bits != 0; bits &= bits - 1) {
                    part.set(support[static_cast<std::size_t>(std::countr_zero(bits))]);
                }
                result.value = w;
                result.exact = true;
                result.searched_weight = w;
                result.witness = z_type ? PauliOperator::z_type(std::move(part))
                                        : PauliOperator::x_type(std::move(part));
                return result;
            }
        } while (next_combination(support, n));
        result.searched_weight = w;
    }
    result.value = result.searched_weight + 1;
    return result;
}

PauliOperator pairing_witness(std::size_t n_tilde) {
    if (n_tilde < 2 || n_tilde % 2 != 0) {
        throw InvalidParameter("pairing witness needs an even vertex count");
    }
    const gf2::EdgeIndexMap edges(n_tilde);
    gf2::BitVector z(edges.edge_count());
    for (std::size_t i = 1; i <= n_tilde / 2; ++i) {
        z.set(edges.index(2 * i - 1, 2 * i));
    }
    return PauliOperator::z_type(std::move(z));
}

bool generators_commute(const StabilizerCode &code) {
    const auto gens = code.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        for (std::size_t b = a + 1; b < gens.size(); ++b) {
            if (!commutes(gens[a], gens[b])) {
                return false;
            }
        }
    }
    return true;
}

bool logicals_valid(const StabilizerCode &code) {
    if (!code.has_logicals()) {
        return false;
    }
    return in_centralizer(code.logical_x(), code) && in_centralizer(code.logical_z(), code) &&
           !commutes(code.logical_x(), code.logical_z());
}

std::size_t logical_qubit_count(const StabilizerCode &code) {
    return code.n_qubits() - gf2::rank(code.h());
}

std::vector<Check> verify_summoning_code(const StabilizerCode &code,
                                         const VerifyOptions &options) {
    std::vector<Check> checks;
    const std::size_t order = code.graph_order();

    checks.push_back({"generators_commute", generators_commute(code), ""});

    const std::size_t r = gf2::rank(code.h());
    const std::size_t expected_rank = code.n_qubits() - 1;
    checks.push_back({"rank", r == expected_rank,
                      "rank " + std::to_string(r) + ", expected " + std::to_string(expected_rank)});

    checks.push_back({"logical_operators", logicals_valid(code), ""});

    for (std::size_t v = 1; v <= order; ++v) {
        checks.push_back({"erasure_r" + std::to_string(v), erasure_correctable(code, v), ""});
    }

    const std::size_t expected_distance = order / 2;
    const PauliOperator witness = pairing_witness(order);
    const bool witness_ok = is_nontrivial_logical(witness, code);
    checks.push_back({"pairing_witness", witness_ok,
                      "weight " + std::to_string(witness.weight()) + " operator in C(S)\\S"});

    if (order <= options.exact_distance_max_order) {
        const DistanceResult d = distance(code, expected_distance);
        const bool ok = d.exact && d.value == expected_distance;
        checks.push_back({"distance", ok,
                          d.exact ? "distance=" + std::to_string(d.value) + " exact"
                                  : "no logical up to weight " + std::to_string(d.searched_weight)});
    } else {
        const std::size_t w = std::min(options.fallback_search_weight, expected_distance - 1);
        const DistanceResult d = distance(code, w);
        const bool ok = !d.exact && witness_ok;
        checks.push_back({"distance", ok,
                          "distance >= " + std::to_string(d.value) + " (searched to weight " +
                              std::to_string(d.searched_weight) + "), <= " +
                              std::to_string(witness.weight()) +
                              " by witness; exact search skipped"});
    }
    return checks;
}

} // namespace summon::code
