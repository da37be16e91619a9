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

#include <string>
#include <string_view>

#include "summon/circuits/circuit.hpp"

namespace summon::circuits {

/// Line-oriented circuit text:
///
///     qubits 6
///     cbits 2
///     label q0 = e_1_2
///     H q3
///     CNOT q0 q1
///     CZ q0 q1
///     MPP Z q2 Z q4 -> c0
///     X? c1 q2
///
/// `X q<i>`, `Z q<i>` and `Z? c<k> q<i>` are also accepted. Output is
/// byte-stable: same circuit, same text.
std::string to_text(const Circuit &c);

/// Throws InvalidParameter on malformed input.
Circuit from_text(std::string_view text);

} // namespace summon::circuits
