#include "octa/bitops.hpp"

#if defined(OCTA_HAVE_AVX2_TU)

#include <immintrin.h>

#include <bit>

// AVX2 variants of the GF(2) kernels. Popcount uses the nibble-shuffle
// table plus psadbw accumulation; AVX2 has no vector popcount instruction.

namespace octa::bitops::avx2 {

namespace {

inline __m256i popcount_epu8(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low_mask = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low_mask);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi32(v, 4), low_mask);
    return _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
}

inline std::uint64_t hsum_epu64(__m256i acc) {
    __m128i lo = _mm256_castsi256_si128(acc);
    __m128i hi = _mm256_extracti128_si256(acc, 1);
    __m128i s = _mm_add_epi64(lo, hi);
    return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
           static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

template <typename Load>
std::uint64_t popcount_stream(std::size_t words, Load load) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i counts = popcount_epu8(load(i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(counts, _mm256_setzero_si256()));
    }
    std::uint64_t total = hsum_epu64(acc);
    return total;
}

}  // namespace

void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(a, b));
    }
    for (; i < words; ++i) dst[i] ^= src[i];
}

void xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words) {
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(x, y));
    }
    for (; i < words; ++i) dst[i] = a[i] ^ b[i];
}

std::uint64_t popcount(const std::uint64_t* p, std::size_t words) {
    std::uint64_t total = popcount_stream(
        words, [&](std::size_t i) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i)); });
    for (std::size_t i = words & ~std::size_t{3}; i < words; ++i)
        total += static_cast<std::uint64_t>(std::popcount(p[i]));
    return total;
}

std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t total = popcount_stream(words, [&](std::size_t i) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        return _mm256_xor_si256(x, y);
    });
    for (std::size_t i = words & ~std::size_t{3}; i < words; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] ^ b[i]));
    return total;
}

std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::uint64_t total = popcount_stream(words, [&](std::size_t i) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        return _mm256_and_si256(x, y);
    });
    for (std::size_t i = words & ~std::size_t{3}; i < words; ++i)
        total += static_cast<std::uint64_t>(std::popcount(a[i] & b[i]));
    return total;
}

bool is_zero(const std::uint64_t* p, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i)));
    if (!_mm256_testz_si256(acc, acc)) return false;
    std::uint64_t tail = 0;
    for (; i < words; ++i) tail |= p[i];
    return tail == 0;
}

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_or_si256(acc, _mm256_xor_si256(x, y));
    }
    if (!_mm256_testz_si256(acc, acc)) return false;
    std::uint64_t tail = 0;
    for (; i < words; ++i) tail |= a[i] ^ b[i];
    return tail == 0;
}

}  // namespace octa::bitops::avx2

#endif  // OCTA_HAVE_AVX2_TU
