#include "floer/f2kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

#include <bit>

namespace floer::f2k::detail {

void xor_words_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        uint64x2_t a = vld1q_u64(dst + k);
        uint64x2_t b = vld1q_u64(src + k);
        vst1q_u64(dst + k, veorq_u64(a, b));
    }
    for (; k < n; ++k) dst[k] ^= src[k];
}

std::uint64_t popcount_words_neon(const std::uint64_t* p, std::size_t n) {
    std::uint64_t c = 0;
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
        uint8x16_t v = vreinterpretq_u8_u64(vld1q_u64(p + k));
        c += vaddvq_u8(vcntq_u8(v));
    }
    for (; k < n; ++k) c += static_cast<std::uint64_t>(std::popcount(p[k]));
    return c;
}

std::size_t first_nonzero_word_neon(const std::uint64_t* p, std::size_t begin, std::size_t n) {
    std::size_t k = begin;
    for (; k + 2 <= n; k += 2) {
        uint64x2_t v = vld1q_u64(p + k);
        if (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) {
            return p[k] ? k : k + 1;
        }
    }
    for (; k < n; ++k)
        if (p[k]) return k;
    return n;
}

} // namespace floer::f2k::detail

#endif // aarch64
