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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

// Inner loops shared by the dense and stabilizer simulators. Each kernel has a
// scalar reference implementation and, where the CPU supports it, an AVX2
// variant. The variant is picked once at startup; QECC1WQC_SIMD=scalar in the
// environment forces the reference path.

namespace qecc1wqc::simd {

using amp_t = std::complex<double>;

enum class Isa : uint8_t { Scalar, Avx2 };

struct KernelSet {
    Isa isa;
    const char *name;

    /// lhs <- lhs * rhs on packed (x, z) bit rows of `num_words` 64-bit words.
    /// Returns log_i of the phase picked up by the per-qubit products (0..3).
    /// Sign/phase fields of the operands are the caller's business.
    uint8_t (*mul_rows)(uint64_t *lhs_x, uint64_t *lhs_z, const uint64_t *rhs_x, const uint64_t *rhs_z,
                        std::size_t num_words);

    /// Applies the 2x2 matrix {m[0], m[1]; m[2], m[3]} to every amplitude pair
    /// (i, i | mask) with (i & mask) == 0.
    void (*apply_1q)(amp_t *amps, std::size_t len, std::size_t mask, const amp_t *m);

    /// Multiplies amplitudes with the masked bit clear by d0 and set by d1.
    void (*apply_diag)(amp_t *amps, std::size_t len, std::size_t mask, amp_t d0, amp_t d1);

    /// Negates amplitudes where both masked bits are set.
    void (*apply_cz)(amp_t *amps, std::size_t len, std::size_t mask_a, std::size_t mask_b);

    /// Sum of |a_i|^2 over indices with the masked bit set.
    double (*prob_one)(const amp_t *amps, std::size_t len, std::size_t mask);
};

const KernelSet &scalar_kernels();

/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelSet *avx2_kernels();

/// The kernel set used by the simulators.
const KernelSet &active_kernels();

}  // namespace qecc1wqc::simd
