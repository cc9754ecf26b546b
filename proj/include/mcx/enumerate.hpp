#ifndef MCX_ENUMERATE_HPP
#define MCX_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "mcx/graph.hpp"

namespace mcx {

// Lexicographically smallest upper-triangle adjacency encoding over all
// vertex orderings.  Exact canonical form; intended for n <= 11.
std::uint64_t canonical_code(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// All graphs on exactly n labeled-free vertices, one representative per
// isomorphism class, built by single-vertex augmentation.
std::vector<Graph> all_graphs_upto_iso(std::uint32_t n);

// Connected graphs only.
std::vector<Graph> connected_graphs_upto_iso(std::uint32_t n);

// Connected graphs with girth >= 5 (trees included), one per isomorphism
// class.  Augmentation attaches each new vertex to sets of pairwise
// distance >= 3, which preserves the girth bound exactly.
std::vector<Graph> connected_girth5_graphs_upto_iso(std::uint32_t n);

} // namespace mcx

#endif // MCX_ENUMERATE_HPP
