#include <doctest.h>

#include <cstdio>
#include <random>
#include <vector>

#include "mcx/gf_kernels.hpp"

using namespace mcx;

namespace {

std::vector<std::uint32_t> random_residues(std::mt19937& rng, std::size_t n, std::uint32_t p) {
    std::vector<std::uint32_t> v(n);
    for (auto& x : v) x = rng() % p;
    return v;
}

} // namespace

TEST_CASE("scalar kernels against plain 64-bit arithmetic") {
    std::mt19937 rng(101);
    const gf::Kernels& k = gf::scalar_kernels();
    for (std::uint32_t p : {2u, 3u, 5u, 47u, 65521u, 2147483647u}) {
        for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{64}}) {
            auto x = random_residues(rng, n, p);
            auto y = random_residues(rng, n, p);
            std::uint32_t a = rng() % p;
            auto want = y;
            for (std::size_t i = 0; i < n; ++i)
                want[i] = static_cast<std::uint32_t>(
                    (static_cast<std::uint64_t>(a) * x[i] + y[i]) % p);
            k.axpy(y.data(), x.data(), n, a, p);
            CHECK(y == want);
        }
    }
}

TEST_CASE("simd kernels agree with the scalar reference") {
    const gf::Kernels* simd = gf::simd_kernels();
    if (!simd) {
        MESSAGE("no SIMD kernel on this CPU; skipping equivalence");
        return;
    }
    std::mt19937 rng(202);
    const gf::Kernels& ref = gf::scalar_kernels();
    // every modulus below the vectorization limit, odd lengths included
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 47u, 251u, 1009u, 32749u}) {
        for (std::size_t n : {std::size_t{1},  std::size_t{5},  std::size_t{8},
                              std::size_t{9},  std::size_t{31}, std::size_t{64},
                              std::size_t{65}, std::size_t{1000}}) {
            for (int rep = 0; rep < 8; ++rep) {
                auto x = random_residues(rng, n, p);
                auto y = random_residues(rng, n, p);
                std::uint32_t a = rng() % p;
                auto y_ref = y, y_simd = y;
                ref.axpy(y_ref.data(), x.data(), n, a, p);
                simd->axpy(y_simd.data(), x.data(), n, a, p);
                CHECK(y_ref == y_simd);

                auto x_ref = x, x_simd = x;
                ref.scale(x_ref.data(), n, a, p);
                simd->scale(x_simd.data(), n, a, p);
                CHECK(x_ref == x_simd);
            }
        }
    }
}

TEST_CASE("kernel selection respects the modulus limit") {
    const gf::Kernels& small = gf::select_kernels(3);
    const gf::Kernels& large = gf::select_kernels(65537);
    CHECK(std::string(large.name) == "scalar");
    if (gf::simd_kernels())
        CHECK(std::string(small.name) != "scalar");
    MESSAGE("kernels for p=3: ", std::string(small.name));
}

TEST_CASE("extreme coefficients stay reduced") {
    // a = p-1, values p-1: the largest products the kernels ever see
    for (std::uint32_t p : {2u, 3u, 32749u}) {
        const gf::Kernels& k = gf::select_kernels(p);
        std::vector<std::uint32_t> x(33, p - 1), y(33, p - 1);
        k.axpy(y.data(), x.data(), x.size(), p - 1, p);
        std::uint64_t want = (static_cast<std::uint64_t>(p - 1) * (p - 1) + (p - 1)) % p;
        for (auto v : y) CHECK(v == static_cast<std::uint32_t>(want));
    }
}

TEST_CASE("modular inverse") {
    for (std::uint32_t p : {2u, 3u, 5u, 47u, 65521u}) {
        for (std::uint32_t a = 1; a < std::min(p, 50u); ++a) {
            std::uint64_t prod = static_cast<std::uint64_t>(a) * gf::mod_inverse(a, p) % p;
            CHECK(prod == 1);
        }
    }
}
