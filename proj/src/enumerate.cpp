#include "mcx/enumerate.hpp"

#include <algorithm>
#include <unordered_set>

#include "mcx/error.hpp"

namespace mcx {

namespace {

// Branch-and-bound minimization of the adjacency bit string.  Vertices are
// placed one at a time; the bits a new vertex contributes against the
// already-placed prefix are compared against the best known code, pruning
// any ordering that can no longer win.
struct CanonSearch {
    const Graph& g;
    std::uint32_t n;
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<std::uint32_t> placed;
    std::vector<char> used;

    explicit CanonSearch(const Graph& graph)
        : g(graph), n(graph.n), used(graph.n, 0) {
        placed.reserve(n);
    }

    static std::uint32_t bits_before(std::uint32_t k) { return k * (k - 1) / 2; }

    void dfs(std::uint64_t code, std::uint32_t bit_count) {
        std::uint32_t k = static_cast<std::uint32_t>(placed.size());
        if (k == n) {
            best = std::min(best, code);
            return;
        }
        for (std::uint32_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            std::uint64_t row = 0;
            for (std::uint32_t j = 0; j < k; ++j)
                row = (row << 1) | (g.has_edge(v, placed[j]) ? 1u : 0u);
            std::uint64_t next = (code << k) | row;
            std::uint32_t next_bits = bit_count + k;
            // compare against the best code's prefix of the same length
            std::uint32_t total = bits_before(n);
            if (best != ~std::uint64_t{0}) {
                std::uint64_t best_prefix = best >> (total - next_bits);
                if (next > best_prefix) continue;
            }
            used[v] = 1;
            placed.push_back(v);
            dfs(next, next_bits);
            placed.pop_back();
            used[v] = 0;
        }
    }
};

} // namespace

std::uint64_t canonical_code(const Graph& g) {
    if (g.n > 11) throw invalid_input("canonical_code: supported for n <= 11 only");
    if (g.n <= 1) return 0;
    CanonSearch search(g);
    search.dfs(0, 0);
    return search.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    return canonical_code(a) == canonical_code(b);
}

namespace {

// Augment every (n-1)-vertex representative with one vertex attached to the
// given candidate neighbor sets, deduplicating by canonical code.
template <class CandidateSets>
std::vector<Graph> augment(const std::vector<Graph>& smaller, std::uint32_t n,
                           CandidateSets&& candidate_sets) {
    std::vector<Graph> out;
    std::unordered_set<std::uint64_t> seen;
    for (const Graph& h : smaller) {
        for (const VSet& s : candidate_sets(h)) {
            auto edges = h.edges;
            s.for_each([&](std::uint32_t u) { edges.emplace_back(u, n - 1); });
            Graph g = make_graph(n, edges);
            if (seen.insert(canonical_code(g)).second) out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<VSet> all_subsets(std::uint32_t n, bool include_empty) {
    std::vector<VSet> out;
    for (std::uint32_t mask = include_empty ? 0 : 1; mask < (1u << n); ++mask) {
        VSet s;
        for (std::uint32_t v = 0; v < n; ++v)
            if (mask & (1u << v)) s.set(v);
        out.push_back(s);
    }
    return out;
}

} // namespace

std::vector<Graph> all_graphs_upto_iso(std::uint32_t n) {
    if (n == 0) return {};
    std::vector<Graph> cur{make_graph(1, {})};
    for (std::uint32_t k = 2; k <= n; ++k)
        cur = augment(cur, k, [&](const Graph&) { return all_subsets(k - 1, true); });
    return cur;
}

std::vector<Graph> connected_graphs_upto_iso(std::uint32_t n) {
    // every connected graph has a non-cut vertex, so attaching the new
    // vertex to nonempty sets reaches every class
    if (n == 0) return {};
    std::vector<Graph> cur{make_graph(1, {})};
    for (std::uint32_t k = 2; k <= n; ++k)
        cur = augment(cur, k, [&](const Graph&) { return all_subsets(k - 1, false); });
    return cur;
}

namespace {

// Nonempty vertex sets of h with pairwise distance >= 3: attaching a new
// vertex to such a set cannot close a cycle shorter than 5.
std::vector<VSet> distance3_sets(const Graph& h) {
    const std::uint32_t n = h.n;
    std::vector<VSet> near(n);  // vertex, its neighbors, their neighbors
    for (std::uint32_t v = 0; v < n; ++v) {
        near[v] = h.adj[v];
        h.adj[v].for_each([&](std::uint32_t u) { near[v] |= h.adj[u]; });
        near[v].set(v);
    }
    std::vector<VSet> out;
    std::vector<std::uint32_t> chosen;
    auto rec = [&](auto&& self, std::uint32_t v, VSet blocked) -> void {
        if (!chosen.empty()) {
            VSet s;
            for (std::uint32_t c : chosen) s.set(c);
            out.push_back(s);
        }
        for (std::uint32_t u = v; u < n; ++u) {
            if (blocked.test(u)) continue;
            chosen.push_back(u);
            self(self, u + 1, blocked | near[u]);
            chosen.pop_back();
        }
    };
    rec(rec, 0, VSet{});
    return out;
}

} // namespace

std::vector<Graph> connected_girth5_graphs_upto_iso(std::uint32_t n) {
    if (n == 0) return {};
    std::vector<Graph> cur{make_graph(1, {})};
    for (std::uint32_t k = 2; k <= n; ++k)
        cur = augment(cur, k, [&](const Graph& h) { return distance3_sets(h); });
    return cur;
}

} // namespace mcx
