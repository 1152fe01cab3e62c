#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "ogl/kernels.hpp"
#include "ogl/rng.hpp"

using namespace ogl;

namespace {

std::vector<std::uint32_t> random_sorted_unique(RandomStream& rng, std::uint32_t max_len,
                                                std::uint32_t universe) {
    std::uint32_t len = rng.next_bounded(max_len + 1);
    std::vector<std::uint32_t> v(len);
    for (auto& x : v) x = rng.next_bounded(universe);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::uint32_t> reference_intersection(const std::vector<std::uint32_t>& a,
                                                  const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
}

}  // namespace

TEST_CASE("mix64_fill matches the stream it is documented against") {
    RandomStream rs(12345);
    rs.advance(7);
    std::vector<std::uint64_t> batch(100);
    kernels::detail::mix64_fill_scalar(12345, rs.counter(), batch.data(), batch.size());
    for (std::uint64_t v : batch) CHECK(v == rs.next_u64());
}

TEST_CASE("scalar intersect agrees with std::set_intersection") {
    RandomStream rng(1);
    for (int iter = 0; iter < 2000; ++iter) {
        auto a = random_sorted_unique(rng, 64, 150);
        auto b = random_sorted_unique(rng, 64, 150);
        auto ref = reference_intersection(a, b);
        std::vector<std::uint32_t> out(std::min(a.size(), b.size()) + 8);
        std::size_t k = kernels::detail::intersect_scalar(a.data(), a.size(), b.data(),
                                                          b.size(), out.data());
        REQUIRE(k == ref.size());
        CHECK(std::equal(ref.begin(), ref.end(), out.begin()));
        CHECK(kernels::detail::intersect_count_scalar(a.data(), a.size(), b.data(),
                                                      b.size()) == ref.size());
    }
}

#if defined(__x86_64__) || defined(_M_X64)
TEST_CASE("avx2 variants are bit-identical to scalar") {
    if (!kernels::avx2_supported()) {
        MESSAGE("AVX2 unavailable, skipping");
        return;
    }
    RandomStream rng(2);
    SUBCASE("intersect, randomized") {
        for (int iter = 0; iter < 4000; ++iter) {
            std::uint32_t universe = 20 + rng.next_bounded(400);
            auto a = random_sorted_unique(rng, 150, universe);
            auto b = random_sorted_unique(rng, 150, universe);
            std::vector<std::uint32_t> out_s(std::min(a.size(), b.size()) + 8);
            std::vector<std::uint32_t> out_v(std::min(a.size(), b.size()) + 8);
            std::size_t ks = kernels::detail::intersect_scalar(a.data(), a.size(),
                                                               b.data(), b.size(),
                                                               out_s.data());
            std::size_t kv = kernels::detail::intersect_avx2(a.data(), a.size(), b.data(),
                                                             b.size(), out_v.data());
            REQUIRE(ks == kv);
            CHECK(std::equal(out_s.begin(), out_s.begin() + static_cast<long>(ks),
                             out_v.begin()));
            CHECK(kernels::detail::intersect_count_avx2(a.data(), a.size(), b.data(),
                                                        b.size()) == ks);
        }
    }
    SUBCASE("intersect, block boundaries") {
        // identical lists at exact multiples of the 8-lane width
        for (std::size_t len : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 17u, 64u}) {
            std::vector<std::uint32_t> a(len);
            for (std::size_t i = 0; i < len; ++i) a[i] = static_cast<std::uint32_t>(2 * i);
            std::vector<std::uint32_t> out(len + 8);
            CHECK(kernels::detail::intersect_avx2(a.data(), len, a.data(), len,
                                                  out.data()) == len);
            CHECK(kernels::detail::intersect_count_avx2(a.data(), len, a.data(), len) ==
                  len);
        }
    }
    SUBCASE("mix64_fill, all offsets and tails") {
        for (std::size_t len : {0u, 1u, 3u, 4u, 5u, 8u, 31u, 200u}) {
            for (std::uint64_t ctr : {0ull, 1ull, 12345ull}) {
                std::vector<std::uint64_t> s(len), v(len);
                kernels::detail::mix64_fill_scalar(0xABCDEFull, ctr, s.data(), len);
                kernels::detail::mix64_fill_avx2(0xABCDEFull, ctr, v.data(), len);
                CHECK(s == v);
            }
        }
    }
}
#endif

TEST_CASE("backend dispatch") {
    kernels::set_backend(kernels::Backend::scalar);
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    std::uint32_t a[] = {1, 2, 3};
    std::uint32_t b[] = {2, 3, 4};
    CHECK(kernels::intersect_count(a, 3, b, 3) == 2);
    kernels::set_backend(kernels::Backend::auto_detect);
    CHECK(kernels::intersect_count(a, 3, b, 3) == 2);
    if (kernels::avx2_supported())
        CHECK(kernels::active_backend() == kernels::Backend::avx2);
}
