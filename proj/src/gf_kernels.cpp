#include "mcx/gf_kernels.hpp"

#include <cassert>

namespace mcx::gf {

namespace {

void axpy_scalar(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t a, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(a) * x[i] + y[i];
        y[i] = static_cast<std::uint32_t>(v % p);
    }
}

void scale_scalar(std::uint32_t* x, std::size_t n, std::uint32_t a, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(a) * x[i];
        x[i] = static_cast<std::uint32_t>(v % p);
    }
}

const Kernels kScalar{axpy_scalar, scale_scalar, "scalar"};

} // namespace

const Kernels& scalar_kernels() { return kScalar; }

const Kernels& select_kernels(std::uint32_t p) {
    if (p < kSimdModulusLimit) {
        if (const Kernels* k = simd_kernels()) return *k;
    }
    return kScalar;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    assert(a % p != 0);
    long long t = 0, new_t = 1;
    long long r = p, new_r = a % p;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    assert(r == 1);
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

} // namespace mcx::gf
