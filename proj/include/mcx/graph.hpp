#ifndef MCX_GRAPH_HPP
#define MCX_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcx/bigint.hpp"
#include "mcx/bitset.hpp"
#include "mcx/error.hpp"

namespace mcx {

// Finite simple undirected graph on vertices 0..n-1.  Edge list is kept
// normalized: endpoints ordered, lexicographically sorted, deduplicated.
struct Graph {
    std::uint32_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<VSet> adj;

    std::uint32_t edge_count() const { return static_cast<std::uint32_t>(edges.size()); }
    std::uint32_t degree(std::uint32_t v) const { return adj[v].count(); }
    bool has_edge(std::uint32_t u, std::uint32_t v) const { return adj[u].test(v); }
    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

// Names an edge of a host graph as a vertex of its line graph.  Indices
// run 0..|E|-1 in lexicographic endpoint order.
struct EdgeLabel {
    std::uint32_t index;
    std::uint32_t u, v;
};

// Nonnegative integer coefficients, index = degree, trailing coefficient
// nonzero.  Holds independent-set counts, which overflow machine words
// quickly, hence BigInt.
struct Polynomial {
    std::vector<BigInt> coeff;

    std::size_t degree() const { return coeff.empty() ? 0 : coeff.size() - 1; }
    const BigInt& at(std::size_t k) const;
    BigInt evaluate(long long x) const;
    std::string to_string() const;
    bool operator==(const Polynomial& o) const { return coeff == o.coeff; }
};

Graph make_graph(std::uint32_t n,
                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

Graph disjoint_union(const Graph& a, const Graph& b);

// Named generators.
Graph complete_graph(std::uint32_t n);
Graph complete_bipartite(std::uint32_t m, std::uint32_t n);
Graph cycle_graph(std::uint32_t n);
Graph path_graph(std::uint32_t edge_count);
Graph star_graph(std::uint32_t leaves);
Graph star_triangle(std::uint32_t triangles);

// Connected bipartite base with parts (X, Y), at least one leaf edge per
// X-vertex, zero or more pendant triangles per Y-vertex.  Leaf vertices are
// appended after the base in X order, then triangle vertices in Y order.
struct CWParams {
    Graph base;
    std::vector<std::uint32_t> part_x;
    std::map<std::uint32_t, std::uint32_t> leaf_mult;      // X-vertex -> >= 1
    std::map<std::uint32_t, std::uint32_t> triangle_mult;  // Y-vertex -> >= 0
};
Graph cameron_walker_graph(const CWParams& params);

std::pair<Graph, std::vector<EdgeLabel>> line_graph(const Graph& h);
Graph complement(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<std::uint32_t> girth(const Graph& g);

bool is_connected(const Graph& g);

struct Component {
    Graph graph;
    std::vector<std::uint32_t> vertex_map;  // component vertex -> original vertex
};
std::vector<Component> connected_components(const Graph& g);
Graph induced_subgraph(const Graph& g, const VSet& keep,
                       std::vector<std::uint32_t>* vertex_map = nullptr);

// m(H): maximum matching size, by exhaustive branch and bound.
std::uint32_t max_matching_size(const Graph& h);

// im(H): maximum induced matching size (no edge of H may join endpoints of
// two distinct matching edges), by exhaustive search.
std::uint32_t max_induced_matching_size(const Graph& h);

bool has_perfect_matching(const Graph& h);

// I(G, x): coefficient of x^k counts the independent sets of size k.
Polynomial independence_polynomial(const Graph& g);

} // namespace mcx

#endif // MCX_GRAPH_HPP
