#include "octa/bitops.hpp"

#include <atomic>
#include <bit>

namespace octa::bitops {

namespace scalar {

void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

void xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] ^ b[i];
}

std::uint64_t popcount(const std::uint64_t* p, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i) acc += static_cast<std::uint64_t>(std::popcount(p[i]));
    return acc;
}

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i)
        acc += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    return acc;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i)
        acc += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return acc;
}

bool is_zero(const std::uint64_t* p, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i) acc |= p[i];
    return acc == 0;
}

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words; ++i) acc |= a[i] ^ b[i];
    return acc == 0;
}

}  // namespace scalar

namespace {

struct Dispatch {
    void (*xor_inplace)(std::uint64_t*, const std::uint64_t*, std::size_t);
    void (*xor_into)(std::uint64_t*, const std::uint64_t*, const std::uint64_t*, std::size_t);
    std::uint64_t (*popcount)(const std::uint64_t*, std::size_t);
    std::uint64_t (*xor_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    std::uint64_t (*and_popcount)(const std::uint64_t*, const std::uint64_t*, std::size_t);
    bool (*is_zero)(const std::uint64_t*, std::size_t);
    bool (*equal)(const std::uint64_t*, const std::uint64_t*, std::size_t);
};

constexpr Dispatch kScalar{scalar::xor_inplace, scalar::xor_into,     scalar::popcount,
                           scalar::xor_popcount, scalar::and_popcount, scalar::is_zero,
                           scalar::equal};

#if defined(OCTA_HAVE_AVX2_TU)
constexpr Dispatch kAvx2{avx2::xor_inplace, avx2::xor_into,     avx2::popcount,
                         avx2::xor_popcount, avx2::and_popcount, avx2::is_zero,
                         avx2::equal};
#endif

bool avx2_available() {
#if defined(OCTA_HAVE_AVX2_TU)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

std::atomic<Backend> g_backend{[] {
#if defined(OCTA_HAVE_AVX2_TU)
    if (avx2_available()) return Backend::avx2;
#endif
    return Backend::scalar;
}()};

const Dispatch& table() {
#if defined(OCTA_HAVE_AVX2_TU)
    if (g_backend.load(std::memory_order_relaxed) == Backend::avx2) return kAvx2;
#endif
    return kScalar;
}

}  // namespace

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

Backend detect_backend() { return avx2_available() ? Backend::avx2 : Backend::scalar; }

bool force_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_available()) return false;
    g_backend.store(b, std::memory_order_relaxed);
    return true;
}

void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    table().xor_inplace(dst, src, words);
}

void xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words) {
    table().xor_into(dst, a, b, words);
}

std::uint64_t popcount(const std::uint64_t* p, std::size_t words) {
    return table().popcount(p, words);
}

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    return table().xor_popcount(a, b, words);
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    return table().and_popcount(a, b, words);
}

bool is_zero(const std::uint64_t* p, std::size_t words) { return table().is_zero(p, words); }

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    return table().equal(a, b, words);
}

}  // namespace octa::bitops
