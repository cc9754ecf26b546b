#include <algorithm>
#include <cstdlib>
#include <vector>

#include "mcx/bigint.hpp"
#include "mcx/gf_kernels.hpp"
#include "mcx/homology.hpp"

namespace mcx {

namespace {

using u32 = std::uint32_t;
using i64 = long long;
using i128 = __int128;

// --- rank over GF(p): dense row elimination driven by the gf kernels ---

u32 gf_rank(std::vector<u32> a, u32 rows, u32 cols, u32 p) {
    if (rows == 0 || cols == 0) return 0;
    const gf::Kernels& k = gf::select_kernels(p);
    u32 r = 0;
    for (u32 c = 0; c < cols && r < rows; ++c) {
        u32 pivot = rows;
        for (u32 i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i) * cols + c] != 0) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != r)
            std::swap_ranges(a.begin() + static_cast<std::size_t>(pivot) * cols + c,
                             a.begin() + static_cast<std::size_t>(pivot + 1) * cols,
                             a.begin() + static_cast<std::size_t>(r) * cols + c);
        const u32* prow = &a[static_cast<std::size_t>(r) * cols];
        u32 inv = gf::mod_inverse(prow[c], p);
        for (u32 i = r + 1; i < rows; ++i) {
            u32* row = &a[static_cast<std::size_t>(i) * cols];
            if (row[c] == 0) continue;
            u32 factor = static_cast<u32>((static_cast<std::uint64_t>(row[c]) * inv) % p);
            k.axpy(row + c, prow + c, cols - c, p - factor, p);
        }
        ++r;
    }
    return r;
}

// --- rank over Q: fraction-free (Bareiss) elimination ---
//
// Pivots are chosen with minimal absolute value (ties: fewer nonzeros in the
// pivot row) to keep the exactly-divisible intermediates small.  The 64-bit
// path checks every product and quotient; overflow restarts the elimination
// with arbitrary-precision entries.

struct BareissOverflow {};

u32 bareiss_rank_i64(std::vector<i64> a, u32 rows, u32 cols) {
    u32 r = 0;
    i64 prev = 1;
    std::vector<u32> colperm(cols);
    for (u32 j = 0; j < cols; ++j) colperm[j] = j;
    auto at = [&](u32 i, u32 j) -> i64& {
        return a[static_cast<std::size_t>(i) * cols + colperm[j]];
    };
    while (r < rows && r < cols) {
        u32 pr = rows, pc = cols;
        i64 pval = 0;
        for (u32 i = r; i < rows; ++i)
            for (u32 j = r; j < cols; ++j) {
                i64 v = at(i, j);
                if (v == 0) continue;
                i64 av = v < 0 ? -v : v;
                if (pr == rows || av < pval) {
                    pr = i;
                    pc = j;
                    pval = av;
                    if (pval == 1) goto found;
                }
            }
    found:
        if (pr == rows) break;
        if (pc != r) std::swap(colperm[pc], colperm[r]);
        if (pr != r)
            for (u32 j = 0; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(pr) * cols + j],
                          a[static_cast<std::size_t>(r) * cols + j]);
        const i64 piv = at(r, r);
        for (u32 i = r + 1; i < rows; ++i) {
            const i64 mult = at(i, r);
            for (u32 j = r + 1; j < cols; ++j) {
                i128 t = static_cast<i128>(at(i, j)) * piv - static_cast<i128>(mult) * at(r, j);
                t /= prev;  // exact by the Bareiss identity
                if (t > static_cast<i128>(0x7fffffffffffffffLL) ||
                    t < -static_cast<i128>(0x7fffffffffffffffLL) - 1)
                    throw BareissOverflow{};
                at(i, j) = static_cast<i64>(t);
            }
            at(i, r) = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

u32 bareiss_rank_big(std::vector<BigInt> a, u32 rows, u32 cols) {
    u32 r = 0;
    BigInt prev{1};
    std::vector<u32> colperm(cols);
    for (u32 j = 0; j < cols; ++j) colperm[j] = j;
    auto at = [&](u32 i, u32 j) -> BigInt& {
        return a[static_cast<std::size_t>(i) * cols + colperm[j]];
    };
    while (r < rows && r < cols) {
        u32 pr = rows, pc = cols;
        for (u32 i = r; i < rows; ++i)
            for (u32 j = r; j < cols; ++j) {
                BigInt& v = at(i, j);
                if (v.is_zero()) continue;
                if (pr == rows || v.cmp_abs(at(pr, pc)) < 0) {
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;
        if (pc != r) std::swap(colperm[pc], colperm[r]);
        if (pr != r)
            for (u32 j = 0; j < cols; ++j)
                std::swap(a[static_cast<std::size_t>(pr) * cols + j],
                          a[static_cast<std::size_t>(r) * cols + j]);
        const BigInt piv = at(r, r);
        for (u32 i = r + 1; i < rows; ++i) {
            const BigInt mult = at(i, r);
            for (u32 j = r + 1; j < cols; ++j)
                at(i, j) = (at(i, j) * piv - mult * at(r, j)).div_exact(prev);
            at(i, r) = BigInt{0};
        }
        prev = piv;
        ++r;
    }
    return r;
}

} // namespace

std::uint32_t rank(const BoundaryMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (field.is_rationals()) {
        std::vector<i64> dense(static_cast<std::size_t>(m.rows) * m.cols, 0);
        for (u32 j = 0; j < m.cols; ++j)
            for (const auto& e : m.columns[j])
                dense[static_cast<std::size_t>(e.row) * m.cols + j] = e.sign;
        try {
            return bareiss_rank_i64(std::move(dense), m.rows, m.cols);
        } catch (const BareissOverflow&) {
            std::vector<BigInt> big(static_cast<std::size_t>(m.rows) * m.cols, BigInt{0});
            for (u32 j = 0; j < m.cols; ++j)
                for (const auto& e : m.columns[j])
                    big[static_cast<std::size_t>(e.row) * m.cols + j] = BigInt{e.sign};
            return bareiss_rank_big(std::move(big), m.rows, m.cols);
        }
    }
    const u32 p = field.p;
    std::vector<u32> dense(static_cast<std::size_t>(m.rows) * m.cols, 0);
    for (u32 j = 0; j < m.cols; ++j)
        for (const auto& e : m.columns[j])
            dense[static_cast<std::size_t>(e.row) * m.cols + j] = e.sign > 0 ? 1u : p - 1;
    return gf_rank(std::move(dense), m.rows, m.cols, p);
}

std::uint32_t rank_dense(const std::vector<std::vector<long long>>& m, const FieldSpec& field) {
    if (m.empty() || m[0].empty()) return 0;
    const u32 rows = static_cast<u32>(m.size());
    const u32 cols = static_cast<u32>(m[0].size());
    if (field.is_rationals()) {
        std::vector<i64> dense;
        dense.reserve(static_cast<std::size_t>(rows) * cols);
        for (const auto& row : m) dense.insert(dense.end(), row.begin(), row.end());
        try {
            return bareiss_rank_i64(std::move(dense), rows, cols);
        } catch (const BareissOverflow&) {
            std::vector<BigInt> big;
            big.reserve(static_cast<std::size_t>(rows) * cols);
            for (const auto& row : m)
                for (i64 v : row) big.emplace_back(v);
            return bareiss_rank_big(std::move(big), rows, cols);
        }
    }
    const u32 p = field.p;
    std::vector<u32> dense;
    dense.reserve(static_cast<std::size_t>(rows) * cols);
    for (const auto& row : m)
        for (i64 v : row) {
            i64 red = v % static_cast<i64>(p);
            if (red < 0) red += p;
            dense.push_back(static_cast<u32>(red));
        }
    return gf_rank(std::move(dense), rows, cols, p);
}

} // namespace mcx
