#pragma once
#include <cstddef>
#include <cstdint>

// Packed-word kernels for GF(2) column arithmetic. Everything above this layer
// (elimination, homology) calls through the dispatched entry points; the scalar
// variants are the reference semantics and the SIMD variants must match them
// bit for bit on every input.
namespace floer::f2k {

enum class Backend { scalar, avx2, neon };

// dst[k] ^= src[k] for k in [0, n)
void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
// total set-bit count over p[0..n)
std::uint64_t popcount_words(const std::uint64_t* p, std::size_t n);
// smallest k in [begin, n) with p[k] != 0, or n if none
std::size_t first_nonzero_word(const std::uint64_t* p, std::size_t begin, std::size_t n);

Backend active_backend();
const char* backend_name();

// Force a backend (used by the equivalence tests and the FLOER_GAMMA_KERNELS
// env override). Throws std::runtime_error if unavailable on this CPU/build.
void force_backend(Backend b);

namespace detail {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::uint64_t popcount_words_scalar(const std::uint64_t* p, std::size_t n);
std::size_t first_nonzero_word_scalar(const std::uint64_t* p, std::size_t begin, std::size_t n);

bool avx2_available();
#if defined(__x86_64__) || defined(_M_X64)
void xor_words_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::uint64_t popcount_words_avx2(const std::uint64_t* p, std::size_t n);
std::size_t first_nonzero_word_avx2(const std::uint64_t* p, std::size_t begin, std::size_t n);
#endif
#if defined(__aarch64__)
void xor_words_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::uint64_t popcount_words_neon(const std::uint64_t* p, std::size_t n);
std::size_t first_nonzero_word_neon(const std::uint64_t* p, std::size_t begin, std::size_t n);
#endif

} // namespace detail
} // namespace floer::f2k
