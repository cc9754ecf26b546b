// SIMD variants of the GF(p) row kernels, restricted to p < 2^15 so that
// a*x + y with fully reduced operands stays below 2^31 and the reduction
// can run in 32-bit lanes.
//
// Reduction: with M = floor(2^31 / p) and v < 2^31, the estimate
// q = (v * M) >> 31 satisfies q in {floor(v/p) - 1, floor(v/p)}, so
// r = v - q*p lies in [0, 2p) and one conditional subtract finishes.

#include "mcx/gf_kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

namespace mcx::gf {

namespace {

__attribute__((target("avx2")))
void axpy_avx2(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
               std::uint32_t a, std::uint32_t p) {
    const std::uint32_t M = static_cast<std::uint32_t>((1ull << 31) / p);
    const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i Mv = _mm256_set1_epi64x(static_cast<long long>(M));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i yv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i v = _mm256_add_epi32(_mm256_mullo_epi32(xv, av), yv);
        __m256i pe = _mm256_mul_epu32(v, Mv);
        __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), Mv);
        __m256i qe = _mm256_srli_epi64(pe, 31);
        __m256i qo = _mm256_slli_epi64(_mm256_srli_epi64(po, 31), 32);
        __m256i q = _mm256_blend_epi32(qe, qo, 0xAA);
        __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, pv));
        r = _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), r);
    }
    for (; i < n; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(a) * x[i] + y[i];
        y[i] = static_cast<std::uint32_t>(v % p);
    }
}

__attribute__((target("avx2")))
void scale_avx2(std::uint32_t* x, std::size_t n, std::uint32_t a, std::uint32_t p) {
    const std::uint32_t M = static_cast<std::uint32_t>((1ull << 31) / p);
    const __m256i av = _mm256_set1_epi32(static_cast<int>(a));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    const __m256i Mv = _mm256_set1_epi64x(static_cast<long long>(M));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i xv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i v = _mm256_mullo_epi32(xv, av);
        __m256i pe = _mm256_mul_epu32(v, Mv);
        __m256i po = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), Mv);
        __m256i qe = _mm256_srli_epi64(pe, 31);
        __m256i qo = _mm256_slli_epi64(_mm256_srli_epi64(po, 31), 32);
        __m256i q = _mm256_blend_epi32(qe, qo, 0xAA);
        __m256i r = _mm256_sub_epi32(v, _mm256_mullo_epi32(q, pv));
        r = _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(x + i), r);
    }
    for (; i < n; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(a) * x[i];
        x[i] = static_cast<std::uint32_t>(v % p);
    }
}

const Kernels kAvx2{axpy_avx2, scale_avx2, "avx2"};

} // namespace

const Kernels* simd_kernels() {
    static const Kernels* table = []() -> const Kernels* {
        return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
    }();
    return table;
}

} // namespace mcx::gf

#elif defined(__aarch64__)
#include <arm_neon.h>

namespace mcx::gf {

namespace {

void axpy_neon(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
               std::uint32_t a, std::uint32_t p) {
    const std::uint32_t M = static_cast<std::uint32_t>((1ull << 31) / p);
    const uint32x4_t av = vdupq_n_u32(a);
    const uint32x4_t pv = vdupq_n_u32(p);
    const uint32x2_t Mv = vdup_n_u32(M);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t xv = vld1q_u32(x + i);
        uint32x4_t yv = vld1q_u32(y + i);
        uint32x4_t v = vmlaq_u32(yv, xv, av);
        uint64x2_t plo = vmull_u32(vget_low_u32(v), Mv);
        uint64x2_t phi = vmull_u32(vget_high_u32(v), Mv);
        uint32x4_t q = vcombine_u32(vshrn_n_u64(plo, 31), vshrn_n_u64(phi, 31));
        uint32x4_t r = vsubq_u32(v, vmulq_u32(q, pv));
        r = vminq_u32(r, vsubq_u32(r, pv));
        vst1q_u32(y + i, r);
    }
    for (; i < n; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(a) * x[i] + y[i];
        y[i] = static_cast<std::uint32_t>(v % p);
    }
}

void scale_neon(std::uint32_t* x, std::size_t n, std::uint32_t a, std::uint32_t p) {
    const std::uint32_t M = static_cast<std::uint32_t>((1ull << 31) / p);
    const uint32x4_t av = vdupq_n_u32(a);
    const uint32x4_t pv = vdupq_n_u32(p);
    const uint32x2_t Mv = vdup_n_u32(M);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        uint32x4_t v = vmulq_u32(vld1q_u32(x + i), av);
        uint64x2_t plo = vmull_u32(vget_low_u32(v), Mv);
        uint64x2_t phi = vmull_u32(vget_high_u32(v), Mv);
        uint32x4_t q = vcombine_u32(vshrn_n_u64(plo, 31), vshrn_n_u64(phi, 31));
        uint32x4_t r = vsubq_u32(v, vmulq_u32(q, pv));
        r = vminq_u32(r, vsubq_u32(r, pv));
        vst1q_u32(x + i, r);
    }
    for (; i < n; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(a) * x[i];
        x[i] = static_cast<std::uint32_t>(v % p);
    }
}

const Kernels kNeon{axpy_neon, scale_neon, "neon"};

} // namespace

const Kernels* simd_kernels() { return &kNeon; }

} // namespace mcx::gf

#else

namespace mcx::gf {
const Kernels* simd_kernels() { return nullptr; }
} // namespace mcx::gf

#endif
