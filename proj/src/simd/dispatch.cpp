// Copyright 2026 The qecc1wqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <string_view>

#include "qecc1wqc/simd.hpp"

namespace qecc1wqc::simd {

#if defined(QECC1WQC_HAVE_AVX2)
namespace detail {
const KernelSet &avx2_kernel_set();
}
#endif

const KernelSet *avx2_kernels() {
#if defined(QECC1WQC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    if (supported) {
        return &detail::avx2_kernel_set();
    }
#endif
    return nullptr;
}

const KernelSet &active_kernels() {
    static const KernelSet *chosen = [] {
        const char *forced = std::getenv("QECC1WQC_SIMD");
        if (forced != nullptr && std::string_view(forced) == "scalar") {
            return &scalar_kernels();
        }
        if (const KernelSet *k = avx2_kernels()) {
            return k;
        }
        return &scalar_kernels();
    }();
    return *chosen;
}

}  // namespace qecc1wqc::simd
