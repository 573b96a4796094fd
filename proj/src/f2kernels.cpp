#include "floer/f2kernels.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace floer::f2k {
namespace detail {

void xor_words_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) dst[k] ^= src[k];
}

std::uint64_t popcount_words_scalar(const std::uint64_t* p, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t k = 0; k < n; ++k) c += static_cast<std::uint64_t>(std::popcount(p[k]));
    return c;
}

std::size_t first_nonzero_word_scalar(const std::uint64_t* p, std::size_t begin, std::size_t n) {
    for (std::size_t k = begin; k < n; ++k)
        if (p[k]) return k;
    return n;
}

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

} // namespace detail

namespace {

struct Dispatch {
    Backend backend;
    void (*xor_fn)(std::uint64_t*, const std::uint64_t*, std::size_t);
    std::uint64_t (*pop_fn)(const std::uint64_t*, std::size_t);
    std::size_t (*find_fn)(const std::uint64_t*, std::size_t, std::size_t);
};

Dispatch make_dispatch(Backend b) {
    switch (b) {
#if defined(__x86_64__) || defined(_M_X64)
    case Backend::avx2:
        return {Backend::avx2, detail::xor_words_avx2, detail::popcount_words_avx2,
                detail::first_nonzero_word_avx2};
#endif
#if defined(__aarch64__)
    case Backend::neon:
        return {Backend::neon, detail::xor_words_neon, detail::popcount_words_neon,
                detail::first_nonzero_word_neon};
#endif
    default:
        return {Backend::scalar, detail::xor_words_scalar, detail::popcount_words_scalar,
                detail::first_nonzero_word_scalar};
    }
}

bool backend_available(Backend b) {
    switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2:   return detail::avx2_available();
    case Backend::neon:
#if defined(__aarch64__)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Dispatch& dispatch() {
    static Dispatch d = [] {
        Backend b = Backend::scalar;
        if (detail::avx2_available()) b = Backend::avx2;
#if defined(__aarch64__)
        b = Backend::neon;
#endif
        // env override: unknown or unavailable names are ignored (auto choice kept)
        if (const char* env = std::getenv("FLOER_GAMMA_KERNELS")) {
            std::string s(env);
            Backend want = b;
            if (s == "scalar") want = Backend::scalar;
            else if (s == "avx2") want = Backend::avx2;
            else if (s == "neon") want = Backend::neon;
            if (backend_available(want)) b = want;
        }
        return make_dispatch(b);
    }();
    return d;
}

} // namespace

void xor_words(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    dispatch().xor_fn(dst, src, n);
}

std::uint64_t popcount_words(const std::uint64_t* p, std::size_t n) {
    return dispatch().pop_fn(p, n);
}

std::size_t first_nonzero_word(const std::uint64_t* p, std::size_t begin, std::size_t n) {
    return dispatch().find_fn(p, begin, n);
}

Backend active_backend() { return dispatch().backend; }

const char* backend_name() {
    switch (dispatch().backend) {
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    default:            return "scalar";
    }
}

void force_backend(Backend b) {
    if (!backend_available(b))
        throw std::runtime_error("f2k: requested kernel backend not available on this machine");
    dispatch() = make_dispatch(b);
}

} // namespace floer::f2k
