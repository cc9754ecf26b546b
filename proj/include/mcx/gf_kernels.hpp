#ifndef MCX_GF_KERNELS_HPP
#define MCX_GF_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace mcx::gf {

// Row kernels for dense elimination over GF(p).  All values are kept fully
// reduced: inputs and outputs lie in [0, p).
//
// The scalar kernels are the reference implementation; the SIMD variants
// (AVX2 on x86-64, NEON on aarch64) are selected at runtime when the CPU
// supports them and p fits the vectorized reduction (p < 2^15).  Equivalence
// of every variant against the scalar reference is pinned by tests.
struct Kernels {
    // y[i] <- (y[i] + a * x[i]) mod p
    void (*axpy)(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                 std::uint32_t a, std::uint32_t p);
    // x[i] <- (a * x[i]) mod p
    void (*scale)(std::uint32_t* x, std::size_t n, std::uint32_t a, std::uint32_t p);
    const char* name;
};

const Kernels& scalar_kernels();

// SIMD kernel table for this build, or nullptr when the CPU (or the
// toolchain target) does not support one.  Valid only for p < 2^15.
const Kernels* simd_kernels();

// Best kernel table for the given modulus.
const Kernels& select_kernels(std::uint32_t p);

inline constexpr std::uint32_t kSimdModulusLimit = 1u << 15;

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

} // namespace mcx::gf

#endif // MCX_GF_KERNELS_HPP
