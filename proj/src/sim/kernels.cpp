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
#include "summon/sim/kernels.hpp"

#include <string>

#include "summon/error.hpp"

namespace summon::sim {

const Kernels &kernels(simd::Isa isa) {
    switch (isa) {
    case simd::Isa::kScalar:
        return detail::kScalarKernels;
    case simd::Isa::kAvx2:
#if defined(SUMMON_QEC_HAVE_AVX2)
        return detail::kAvx2Kernels;
#else
        break;
#endif
    }
    throw InvalidParameter("no statevector kernels for " + std::string(simd::isa_name(isa)));
}

const Kernels &kernels() { return kernels(simd::active_isa()); }

} // namespace summon::sim
