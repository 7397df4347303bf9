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

// Compiled with -mavx2 -mfma. Nothing in here may run before dispatch.cpp has
// confirmed CPU support.

#include <immintrin.h>

#include "qecc1wqc/simd.hpp"

namespace qecc1wqc::simd::detail {
namespace {

// The phase is tallied in per-lane two-bit counters (c2 c1) of the i-exponent.
// Each anticommuting qubit adds +1 or -1; `minus` marks the -1 lanes.
inline uint8_t finish_tally(uint64_t pop1, uint64_t pop2) {
    return (uint8_t)((pop1 + 2 * pop2) & 3);
}

uint8_t mul_rows_avx2(uint64_t *lx, uint64_t *lz, const uint64_t *rx, const uint64_t *rz, std::size_t num_words) {
    __m256i c1 = _mm256_setzero_si256();
    __m256i c2 = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; w + 4 <= num_words; w += 4) {
        __m256i x1 = _mm256_loadu_si256((const __m256i *)(lx + w));
        __m256i z1 = _mm256_loadu_si256((const __m256i *)(lz + w));
        __m256i x2 = _mm256_loadu_si256((const __m256i *)(rx + w));
        __m256i z2 = _mm256_loadu_si256((const __m256i *)(rz + w));
        __m256i nx = _mm256_xor_si256(x1, x2);
        __m256i nz = _mm256_xor_si256(z1, z2);
        __m256i x1z2 = _mm256_and_si256(x1, z2);
        __m256i anti = _mm256_xor_si256(_mm256_and_si256(x2, z1), x1z2);
        __m256i minus = _mm256_xor_si256(_mm256_xor_si256(nx, nz), x1z2);
        c2 = _mm256_xor_si256(c2, _mm256_and_si256(_mm256_xor_si256(c1, minus), anti));
        c1 = _mm256_xor_si256(c1, anti);
        _mm256_storeu_si256((__m256i *)(lx + w), nx);
        _mm256_storeu_si256((__m256i *)(lz + w), nz);
    }
    alignas(32) uint64_t l1[4];
    alignas(32) uint64_t l2[4];
    _mm256_store_si256((__m256i *)l1, c1);
    _mm256_store_si256((__m256i *)l2, c2);
    uint64_t pop1 = 0;
    uint64_t pop2 = 0;
    for (int k = 0; k < 4; k++) {
        pop1 += (uint64_t)__builtin_popcountll(l1[k]);
        pop2 += (uint64_t)__builtin_popcountll(l2[k]);
    }
    uint64_t t1 = 0;
    uint64_t t2 = 0;
    for (; w < num_words; w++) {
        uint64_t x1 = lx[w], z1 = lz[w], x2 = rx[w], z2 = rz[w];
        uint64_t nx = x1 ^ x2;
        uint64_t nz = z1 ^ z2;
        uint64_t x1z2 = x1 & z2;
        uint64_t anti = (x2 & z1) ^ x1z2;
        uint64_t minus = nx ^ nz ^ x1z2;
        t2 ^= (t1 ^ minus) & anti;
        t1 ^= anti;
        lx[w] = nx;
        lz[w] = nz;
    }
    pop1 += (uint64_t)__builtin_popcountll(t1);
    pop2 += (uint64_t)__builtin_popcountll(t2);
    return finish_tally(pop1, pop2);
}

// [re0, im0, re1, im1] * (mr + i mi), lane-wise.
inline __m256d cmul(__m256d v, __m256d mr, __m256d mi) {
    __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(mr, v, _mm256_mul_pd(mi, swapped));
}

void apply_1q_avx2(amp_t *amps, std::size_t len, std::size_t mask, const amp_t *m) {
    if (mask < 2 || len < 4) {
        scalar_kernels().apply_1q(amps, len, mask, m);
        return;
    }
    const __m256d m0r = _mm256_set1_pd(m[0].real()), m0i = _mm256_set1_pd(m[0].imag());
    const __m256d m1r = _mm256_set1_pd(m[1].real()), m1i = _mm256_set1_pd(m[1].imag());
    const __m256d m2r = _mm256_set1_pd(m[2].real()), m2i = _mm256_set1_pd(m[2].imag());
    const __m256d m3r = _mm256_set1_pd(m[3].real()), m3i = _mm256_set1_pd(m[3].imag());
    double *base = reinterpret_cast<double *>(amps);
    for (std::size_t block = 0; block < len; block += 2 * mask) {
        for (std::size_t j = block; j < block + mask; j += 2) {
            double *pa = base + 2 * j;
            double *pb = base + 2 * (j + mask);
            __m256d a = _mm256_loadu_pd(pa);
            __m256d b = _mm256_loadu_pd(pb);
            __m256d na = _mm256_add_pd(cmul(a, m0r, m0i), cmul(b, m1r, m1i));
            __m256d nb = _mm256_add_pd(cmul(a, m2r, m2i), cmul(b, m3r, m3i));
            _mm256_storeu_pd(pa, na);
            _mm256_storeu_pd(pb, nb);
        }
    }
}

void apply_diag_avx2(amp_t *amps, std::size_t len, std::size_t mask, amp_t d0, amp_t d1) {
    if (mask < 2 || len < 4) {
        scalar_kernels().apply_diag(amps, len, mask, d0, d1);
        return;
    }
    const __m256d d0r = _mm256_set1_pd(d0.real()), d0i = _mm256_set1_pd(d0.imag());
    const __m256d d1r = _mm256_set1_pd(d1.real()), d1i = _mm256_set1_pd(d1.imag());
    double *base = reinterpret_cast<double *>(amps);
    for (std::size_t j = 0; j < len; j += 2) {
        double *p = base + 2 * j;
        __m256d v = _mm256_loadu_pd(p);
        v = (j & mask) ? cmul(v, d1r, d1i) : cmul(v, d0r, d0i);
        _mm256_storeu_pd(p, v);
    }
}

void apply_cz_avx2(amp_t *amps, std::size_t len, std::size_t mask_a, std::size_t mask_b) {
    if (mask_a < 2 || mask_b < 2 || len < 4) {
        scalar_kernels().apply_cz(amps, len, mask_a, mask_b);
        return;
    }
    const __m256d sign = _mm256_set1_pd(-0.0);
    double *base = reinterpret_cast<double *>(amps);
    std::size_t both = mask_a | mask_b;
    for (std::size_t j = 0; j < len; j += 2) {
        if ((j & both) == both) {
            double *p = base + 2 * j;
            _mm256_storeu_pd(p, _mm256_xor_pd(_mm256_loadu_pd(p), sign));
        }
    }
}

double prob_one_avx2(const amp_t *amps, std::size_t len, std::size_t mask) {
    if (mask < 2 || len < 4) {
        return scalar_kernels().prob_one(amps, len, mask);
    }
    const double *base = reinterpret_cast<const double *>(amps);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t block = mask; block < len; block += 2 * mask) {
        for (std::size_t j = block; j < block + mask; j += 2) {
            __m256d v = _mm256_loadu_pd(base + 2 * j);
            acc = _mm256_fmadd_pd(v, v, acc);
        }
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

const KernelSet &avx2_kernel_set() {
    static const KernelSet set{
        Isa::Avx2, "avx2", mul_rows_avx2, apply_1q_avx2, apply_diag_avx2, apply_cz_avx2, prob_one_avx2,
    };
    return set;
}

}  // namespace qecc1wqc::simd::detail
