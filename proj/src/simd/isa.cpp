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
#include "summon/simd/isa.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "summon/error.hpp"

namespace summon::simd {
namespace {

constexpr int kUnset = -1;
std::atomic<int> g_forced{kUnset};

Isa detect() {
    if (const char *env = std::getenv("SUMMON_QEC_ISA")) {
        const std::string_view want{env};
        if (want == "scalar") {
            return Isa::kScalar;
        }
        if (want == "avx2" && isa_available(Isa::kAvx2)) {
            return Isa::kAvx2;
        }
    }
    return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

} // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
    case Isa::kScalar:
        return "scalar";
    case Isa::kAvx2:
        return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    switch (isa) {
    case Isa::kScalar:
        return true;
    case Isa::kAvx2:
#if defined(SUMMON_QEC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
        return false;
#endif
    }
    return false;
}

Isa active_isa() {
    const int forced = g_forced.load(std::memory_order_relaxed);
    if (forced != kUnset) {
        return static_cast<Isa>(forced);
    }
    static const Isa detected = detect();
    return detected;
}

void force_isa(Isa isa) {
    if (!isa_available(isa)) {
        throw InvalidParameter("ISA variant not available: " + std::string(isa_name(isa)));
    }
    g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_forced.store(kUnset, std::memory_order_relaxed); }

} // namespace summon::simd
