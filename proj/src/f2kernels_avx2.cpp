#include "floer/f2kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

// AVX2 variants. Compiled with per-function target attributes so the TU itself
// stays baseline; callers must check avx2_available() (the dispatcher does).
namespace floer::f2k::detail {

__attribute__((target("avx2")))
void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_xor_si256(a, b));
    }
    for (; k < n; ++k) dst[k] ^= src[k];
}

// Mula's nibble-table popcount over 256-bit lanes.
__attribute__((target("avx2")))
std::uint64_t popcount_words_avx2(const std::uint64_t* p, std::size_t n) {
    const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                           0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i acc = _mm256_setzero_si256();
    std::size_t k = 0;
    for (; k + 4 <= n; k += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + k));
        __m256i lo = _mm256_and_si256(v, low_mask);
        __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
        __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo),
                                      _mm256_shuffle_epi8(table, hi));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(cnt, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t c = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; k < n; ++k) c += static_cast<std::uint64_t>(std::popcount(p[k]));
    return c;
}

__attribute__((target("avx2")))
std::size_t first_nonzero_word_avx2(const std::uint64_t* p, std::size_t begin, std::size_t n) {
    std::size_t k = begin;
    for (; k + 4 <= n; k += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + k));
        if (!_mm256_testz_si256(v, v)) {
            for (std::size_t j = k; j < k + 4; ++j)
                if (p[j]) return j;
        }
    }
    for (; k < n; ++k)
        if (p[k]) return k;
    return n;
}

} // namespace floer::f2k::detail

#endif // x86
