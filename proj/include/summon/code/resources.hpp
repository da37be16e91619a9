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

namespace summon::code {

/// Encoding cost of the CSS summoning code against the CWS baseline for N
/// diamonds. CSS gate counts come from the synthesized encoder; CWS counts
/// from the graph-state preparation of G_CWS plus the word operator.
struct ResourceCounts {
    std::size_t n = 0;
    std::size_t n_tilde = 0;
    std::size_t q_css = 0;
    std::size_t q_cws = 0;
    std::size_t css_h = 0;
    std::size_t css_cnot = 0;
    std::size_t cws_h = 0;
    std::size_t cws_cz = 0;
    /// CZ-equivalents for applying Z^{⊗N(N-1)}, one per qubit.
    std::size_t cws_word_cz = 0;

    [[nodiscard]] std::size_t css_total() const { return css_h + css_cnot; }
    [[nodiscard]] std::size_t cws_prep_total() const { return cws_h + cws_cz; }
    [[nodiscard]] std::size_t cws_total() const { return cws_h + cws_cz + cws_word_cz; }
};

/// Throws InvalidParameter for n < 3.
ResourceCounts resource_counts(std::size_t n);

} // namespace summon::code
