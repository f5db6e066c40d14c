#pragma once

#include <cstddef>
#include <cstdint>

// Word-level GF(2) kernels behind the edge-space algebra. Every kernel has a
// scalar reference implementation and, on x86-64, an AVX2 variant selected at
// runtime. The two are equivalence-tested against each other; force_backend()
// lets tests drive a specific variant.

namespace octa::bitops {

enum class Backend { scalar, avx2 };

// Backend currently driving the dispatch table.
Backend active_backend();

// Returns false if the requested backend is unavailable on this machine.
bool force_backend(Backend b);

// Best backend the CPU supports.
Backend detect_backend();

// dst[i] ^= src[i]
void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

// dst[i] = a[i] ^ b[i]
void xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words);

std::uint64_t popcount(const std::uint64_t* p, std::size_t words);

// popcount(a ^ b) without materializing the xor
std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

// popcount(a & b)
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

bool is_zero(const std::uint64_t* p, std::size_t words);

bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

namespace scalar {
void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words);
std::uint64_t popcount(const std::uint64_t* p, std::size_t words);
std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
bool is_zero(const std::uint64_t* p, std::size_t words);
bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace scalar

#if defined(OCTA_HAVE_AVX2_TU)
namespace avx2 {
void xor_inplace(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
void xor_into(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
              std::size_t words);
std::uint64_t popcount(const std::uint64_t* p, std::size_t words);
std::uint64_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::uint64_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
bool is_zero(const std::uint64_t* p, std::size_t words);
bool equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace avx2
#endif

}  // namespace octa::bitops
