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

#include "qecc1wqc/simd.hpp"

namespace qecc1wqc::simd {
namespace {

// Exponent of i picked up by P(x1,z1) * P(x2,z2), as a value in {-1, 0, 1}.
int pauli_product_log_i(bool x1, bool z1, bool x2, bool z2) {
    if (!x1 && !z1) {
        return 0;
    }
    if (x1 && z1) {
        return (int)z2 - (int)x2;
    }
    if (x1) {
        return z2 ? (2 * (int)x2 - 1) : 0;
    }
    return x2 ? (1 - 2 * (int)z2) : 0;
}

uint8_t mul_rows_scalar(uint64_t *lx, uint64_t *lz, const uint64_t *rx, const uint64_t *rz, std::size_t num_words) {
    int total = 0;
    for (std::size_t w = 0; w < num_words; w++) {
        for (unsigned b = 0; b < 64; b++) {
            bool x1 = (lx[w] >> b) & 1;
            bool z1 = (lz[w] >> b) & 1;
            bool x2 = (rx[w] >> b) & 1;
            bool z2 = (rz[w] >> b) & 1;
            total += pauli_product_log_i(x1, z1, x2, z2);
        }
        lx[w] ^= rx[w];
        lz[w] ^= rz[w];
    }
    return (uint8_t)(((total % 4) + 4) % 4);
}

void apply_1q_scalar(amp_t *amps, std::size_t len, std::size_t mask, const amp_t *m) {
    for (std::size_t i = 0; i < len; i++) {
        if (i & mask) {
            continue;
        }
        amp_t a = amps[i];
        amp_t b = amps[i | mask];
        amps[i] = m[0] * a + m[1] * b;
        amps[i | mask] = m[2] * a + m[3] * b;
    }
}

void apply_diag_scalar(amp_t *amps, std::size_t len, std::size_t mask, amp_t d0, amp_t d1) {
    for (std::size_t i = 0; i < len; i++) {
        amps[i] *= (i & mask) ? d1 : d0;
    }
}

void apply_cz_scalar(amp_t *amps, std::size_t len, std::size_t mask_a, std::size_t mask_b) {
    for (std::size_t i = 0; i < len; i++) {
        if ((i & mask_a) && (i & mask_b)) {
            amps[i] = -amps[i];
        }
    }
}

double prob_one_scalar(const amp_t *amps, std::size_t len, std::size_t mask) {
    double p = 0;
    for (std::size_t i = 0; i < len; i++) {
        if (i & mask) {
            p += std::norm(amps[i]);
        }
    }
    return p;
}

}  // namespace

const KernelSet &scalar_kernels() {
    static const KernelSet set{
        Isa::Scalar, "scalar", mul_rows_scalar, apply_1q_scalar, apply_diag_scalar, apply_cz_scalar, prob_one_scalar,
    };
    return set;
}

}  // namespace qecc1wqc::simd
