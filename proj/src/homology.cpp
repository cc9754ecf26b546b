#include "mcx/homology.hpp"

namespace mcx {

BettiTable reduced_betti(const SimplicialComplex& c, const FieldSpec& field) {
    auto groups = faces_by_size(c);
    const int dim = c.dim();

    BettiTable table{field, dim, {}};
    table.betti.resize(static_cast<std::size_t>(dim + 2), 0);

    // betti_d = #d-faces - rank d_d - rank d_{d+1}
    std::vector<std::uint32_t> ranks(static_cast<std::size_t>(dim + 3), 0);
    for (int d = 0; d <= dim + 1; ++d)
        ranks[static_cast<std::size_t>(d + 1)] = rank(boundary_matrix(groups, d), field);

    for (int d = -1; d <= dim; ++d) {
        std::int64_t faces = (d + 1 < static_cast<int>(groups.size()))
                                 ? static_cast<std::int64_t>(groups[d + 1].size())
                                 : 0;
        table.betti[static_cast<std::size_t>(d + 1)] =
            faces - ranks[static_cast<std::size_t>(d + 1)] - ranks[static_cast<std::size_t>(d + 2)];
    }
    return table;
}

std::int64_t euler_characteristic_reduced(const BettiTable& b) {
    std::int64_t acc = 0;
    for (int d = -1; d <= b.dim; ++d) acc += (d % 2 == 0 ? 1 : -1) * b.at(d);
    return acc;
}

std::int64_t euler_characteristic_reduced(const std::vector<std::uint64_t>& f_vec) {
    // faces of cardinality k have dimension k-1
    std::int64_t acc = 0;
    for (std::size_t k = 0; k < f_vec.size(); ++k) {
        std::int64_t term = static_cast<std::int64_t>(f_vec[k]);
        acc += (k % 2 == 1 ? 1 : -1) * term;
    }
    return acc;
}

} // namespace mcx
