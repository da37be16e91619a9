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

#include <string_view>

namespace summon::simd {

/// Instruction-set variants a kernel table can be built for.
enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

/// True if the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa);

/// Best available variant, unless overridden by `SUMMON_QEC_ISA=scalar|avx2`
/// or a call to `force_isa`.
Isa active_isa();

/// Pin kernel selection for the whole process. Throws if unavailable.
void force_isa(Isa isa);

/// Drop any `force_isa` pin and return to automatic selection.
void reset_isa();

} // namespace summon::simd
