// SIMD variants of the mask word kernels. Each function falls through to a
// scalar tail so word counts need not be multiples of the vector width.
// Results are bit-identical to the scalar reference (integer bit ops only);
// the equivalence suite in tests/test_kernels.cpp enforces that.

#include "aquamass/kernels.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>

namespace aquamass::kern {

namespace {

#define AQM_AVX2 __attribute__((target("avx2")))

// Per-byte popcount via nibble lookup, accumulated with SAD against zero.
AQM_AVX2 inline __m256i popcount_bytes(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

AQM_AVX2 inline std::uint64_t hsum_sad(__m256i byte_counts) {
    __m256i sums = _mm256_sad_epu8(byte_counts, _mm256_setzero_si256());
    return static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 0)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 1)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 2)) +
           static_cast<std::uint64_t>(_mm256_extract_epi64(sums, 3));
}

AQM_AVX2 std::uint64_t popcount_avx2(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        total += hsum_sad(popcount_bytes(v));
    }
    for (; i < n; ++i) total += std::popcount(a[i]);
    return total;
}

AQM_AVX2 std::uint64_t and_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                         std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        total += hsum_sad(popcount_bytes(_mm256_and_si256(va, vb)));
    }
    for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

AQM_AVX2 std::uint64_t or_popcount_avx2(const std::uint64_t* a, const std::uint64_t* b,
                                        std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        total += hsum_sad(popcount_bytes(_mm256_or_si256(va, vb)));
    }
    for (; i < n; ++i) total += std::popcount(a[i] | b[i]);
    return total;
}

AQM_AVX2 void and3_avx2(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                        std::uint64_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                            _mm256_and_si256(_mm256_and_si256(va, vb), vc));
    }
    for (; i < n; ++i) out[i] = a[i] & b[i] & c[i];
}

AQM_AVX2 void or3_avx2(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                       std::uint64_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i),
                            _mm256_or_si256(_mm256_or_si256(va, vb), vc));
    }
    for (; i < n; ++i) out[i] = a[i] | b[i] | c[i];
}

#undef AQM_AVX2

constexpr Kernels kAvx2 = {
    "avx2", popcount_avx2, and_popcount_avx2, or_popcount_avx2, and3_avx2, or3_avx2,
};

}  // namespace

const Kernels* simd_kernels() {
    return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}

}  // namespace aquamass::kern

#elif defined(__aarch64__)
#include <arm_neon.h>

namespace aquamass::kern {

namespace {

inline std::uint64_t hsum_u8(uint8x16_t byte_counts) {
    return vaddlvq_u8(byte_counts);
}

std::uint64_t popcount_neon(const std::uint64_t* a, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(a + i));
        total += hsum_u8(vcntq_u8(v));
    }
    for (; i < n; ++i) total += std::popcount(a[i]);
    return total;
}

std::uint64_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        uint64x2_t vb = vld1q_u64(b + i);
        total += hsum_u8(vcntq_u8(vreinterpretq_u8_u64(vandq_u64(va, vb))));
    }
    for (; i < n; ++i) total += std::popcount(a[i] & b[i]);
    return total;
}

std::uint64_t or_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::uint64_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t va = vld1q_u64(a + i);
        uint64x2_t vb = vld1q_u64(b + i);
        total += hsum_u8(vcntq_u8(vreinterpretq_u8_u64(vorrq_u64(va, vb))));
    }
    for (; i < n; ++i) total += std::popcount(a[i] | b[i]);
    return total;
}

void and3_neon(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
               std::uint64_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t v = vandq_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)), vld1q_u64(c + i));
        vst1q_u64(out + i, v);
    }
    for (; i < n; ++i) out[i] = a[i] & b[i] & c[i];
}

void or3_neon(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
              std::uint64_t* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        uint64x2_t v = vorrq_u64(vorrq_u64(vld1q_u64(a + i), vld1q_u64(b + i)), vld1q_u64(c + i));
        vst1q_u64(out + i, v);
    }
    for (; i < n; ++i) out[i] = a[i] | b[i] | c[i];
}

constexpr Kernels kNeon = {
    "neon", popcount_neon, and_popcount_neon, or_popcount_neon, and3_neon, or3_neon,
};

}  // namespace

const Kernels* simd_kernels() {
    return &kNeon;
}

}  // namespace aquamass::kern

#else

namespace aquamass::kern {

const Kernels* simd_kernels() {
    return nullptr;
}

}  // namespace aquamass::kern

#endif
