#include <unordered_map>

#include "mcx/homology.hpp"

namespace mcx {

BoundaryMatrix boundary_matrix(const std::vector<std::vector<VSet>>& groups, int d) {
    BoundaryMatrix m;
    m.d = d;
    int max_size = static_cast<int>(groups.size()) - 1;  // largest face cardinality
    int col_card = d + 1, row_card = d;
    if (col_card >= 0 && col_card <= max_size)
        m.cols = static_cast<std::uint32_t>(groups[col_card].size());
    if (row_card >= 0 && row_card <= max_size)
        m.rows = static_cast<std::uint32_t>(groups[row_card].size());
    m.columns.resize(m.cols);
    if (m.rows == 0 || m.cols == 0) return m;

    std::unordered_map<VSet, std::uint32_t, VSetHash> row_index;
    row_index.reserve(m.rows * 2);
    for (std::uint32_t i = 0; i < m.rows; ++i) row_index.emplace(groups[row_card][i], i);

    for (std::uint32_t j = 0; j < m.cols; ++j) {
        const VSet& face = groups[col_card][j];
        std::int8_t sign = 1;
        face.for_each([&](std::uint32_t v) {
            VSet sub = face;
            sub.reset(v);
            m.columns[j].push_back({row_index.at(sub), sign});
            sign = -sign;
        });
    }
    return m;
}

BoundaryMatrix boundary_matrix(const SimplicialComplex& c, int d) {
    return boundary_matrix(faces_by_size(c), d);
}

bool boundary_squares_to_zero(const BoundaryMatrix& low, const BoundaryMatrix& high) {
    // (low * high) column by column, exactly over the integers
    if (high.cols == 0 || low.cols != high.rows) return high.cols == 0;
    std::vector<long long> acc(low.rows, 0);
    for (const auto& col : high.columns) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const auto& e : col)
            for (const auto& f : low.columns[e.row]) acc[f.row] += static_cast<long long>(e.sign) * f.sign;
        for (long long v : acc)
            if (v != 0) return false;
    }
    return true;
}

} // namespace mcx
