#include <doctest.h>

#include <vector>

#include "octa/bitops.hpp"
#include "octa/rng.hpp"

using namespace octa;

namespace {

std::vector<std::uint64_t> random_words(Rng& rng, std::size_t count) {
    std::vector<std::uint64_t> out(count);
    for (auto& w : out) w = rng.next_u64();
    return out;
}

}  // namespace

TEST_SUITE("bitops") {
    TEST_CASE("scalar kernels on known values") {
        std::vector<std::uint64_t> a{0xffULL, 0x1ULL, 0};
        std::vector<std::uint64_t> b{0x0fULL, 0x1ULL, 0};
        CHECK(bitops::scalar::popcount(a.data(), a.size()) == 9);
        CHECK(bitops::scalar::xor_popcount(a.data(), b.data(), a.size()) == 4);
        CHECK(bitops::scalar::and_popcount(a.data(), b.data(), a.size()) == 5);
        CHECK(!bitops::scalar::is_zero(a.data(), a.size()));
        CHECK(bitops::scalar::is_zero(a.data() + 2, 1));
        CHECK(!bitops::scalar::equal(a.data(), b.data(), a.size()));
        CHECK(bitops::scalar::equal(a.data() + 1, b.data() + 1, 2));

        std::vector<std::uint64_t> c = a;
        bitops::scalar::xor_inplace(c.data(), b.data(), c.size());
        CHECK(c == std::vector<std::uint64_t>{0xf0ULL, 0, 0});
    }

    TEST_CASE("backend equivalence on random buffers") {
        if (bitops::detect_backend() != bitops::Backend::avx2) {
            MESSAGE("avx2 unavailable; dispatch test limited to scalar");
            return;
        }
        Rng rng(2024);
        // Sizes straddle the 4-word vector width, including ragged tails.
        for (std::size_t words : {std::size_t{0}, std::size_t{1}, std::size_t{3}, std::size_t{4},
                                  std::size_t{7}, std::size_t{8}, std::size_t{49},
                                  std::size_t{64}, std::size_t{1001}}) {
            auto a = random_words(rng, words);
            auto b = random_words(rng, words);

            REQUIRE(bitops::force_backend(bitops::Backend::avx2));
            const auto pop_fast = bitops::popcount(a.data(), words);
            const auto xpop_fast = bitops::xor_popcount(a.data(), b.data(), words);
            const auto apop_fast = bitops::and_popcount(a.data(), b.data(), words);
            const bool zero_fast = bitops::is_zero(a.data(), words);
            const bool equal_fast = bitops::equal(a.data(), b.data(), words);
            auto xored_fast = a;
            bitops::xor_inplace(xored_fast.data(), b.data(), words);
            std::vector<std::uint64_t> into_fast(words);
            bitops::xor_into(into_fast.data(), a.data(), b.data(), words);

            REQUIRE(bitops::force_backend(bitops::Backend::scalar));
            CHECK(pop_fast == bitops::popcount(a.data(), words));
            CHECK(xpop_fast == bitops::xor_popcount(a.data(), b.data(), words));
            CHECK(apop_fast == bitops::and_popcount(a.data(), b.data(), words));
            CHECK(zero_fast == bitops::is_zero(a.data(), words));
            CHECK(equal_fast == bitops::equal(a.data(), b.data(), words));
            auto xored_scalar = a;
            bitops::xor_inplace(xored_scalar.data(), b.data(), words);
            CHECK(xored_fast == xored_scalar);
            std::vector<std::uint64_t> into_scalar(words);
            bitops::xor_into(into_scalar.data(), a.data(), b.data(), words);
            CHECK(into_fast == into_scalar);
        }
        bitops::force_backend(bitops::detect_backend());
    }

    TEST_CASE("equal vectors and self-xor") {
        Rng rng(7);
        auto a = random_words(rng, 33);
        CHECK(bitops::equal(a.data(), a.data(), a.size()));
        CHECK(bitops::xor_popcount(a.data(), a.data(), a.size()) == 0);
        auto b = a;
        bitops::xor_inplace(b.data(), a.data(), b.size());
        CHECK(bitops::is_zero(b.data(), b.size()));
    }
}
