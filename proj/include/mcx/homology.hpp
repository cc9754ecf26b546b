#ifndef MCX_HOMOLOGY_HPP
#define MCX_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "mcx/complex.hpp"
#include "mcx/field.hpp"

namespace mcx {

// Signed incidence matrix of the augmented oriented chain complex: columns
// indexed by d-faces, rows by (d-1)-faces, entries in {-1, 0, +1} with the
// ascending-vertex orientation.  Stored sparsely as column lists; a column
// of a d-face has exactly d+1 entries with alternating signs.
struct BoundaryMatrix {
    int d = 0;
    std::uint32_t rows = 0, cols = 0;

    struct Entry {
        std::uint32_t row;
        std::int8_t sign;
    };
    std::vector<std::vector<Entry>> columns;
};

// Boundary operator from d-faces to (d-1)-faces; d = 0 is the augmentation
// map onto the empty face.  Out-of-range dimensions give empty matrices.
BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int d);

// Same, reusing a precomputed faces_by_size table.
BoundaryMatrix boundary_matrix(const std::vector<std::vector<VSet>>& groups, int d);

// Exact rank: Gaussian elimination over GF(p), fraction-free elimination
// over the rationals (64-bit fast path, arbitrary precision on overflow).
std::uint32_t rank(const BoundaryMatrix& m, const FieldSpec& field);

// Exact rank of a small dense integer matrix (test and cross-check entry).
std::uint32_t rank_dense(const std::vector<std::vector<long long>>& m, const FieldSpec& field);

// Reduced Betti numbers per dimension for one field.
// betti[i + 1] is the coefficient in dimension i, starting at i = -1.
struct BettiTable {
    FieldSpec field;
    int dim = -1;
    std::vector<std::int64_t> betti;

    std::int64_t at(int i) const {
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
        return betti[idx];
    }
};

BettiTable reduced_betti(const SimplicialComplex& c, const FieldSpec& field);

// Alternating sums that must agree: homological from a BettiTable,
// combinatorial from an f-vector.
std::int64_t euler_characteristic_reduced(const BettiTable& b);
std::int64_t euler_characteristic_reduced(const std::vector<std::uint64_t>& f_vec);

// True when consecutive boundary maps compose to zero (exact, over the
// integers).
bool boundary_squares_to_zero(const BoundaryMatrix& low, const BoundaryMatrix& high);

} // namespace mcx

#endif // MCX_HOMOLOGY_HPP
