#include "mcx/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace mcx {

namespace {

const BigInt kZero{0};

void rebuild_adjacency(Graph& g) {
    g.adj.assign(g.n, VSet{});
    for (auto [u, v] : g.edges) {
        g.adj[u].set(v);
        g.adj[v].set(u);
    }
}

} // namespace

const BigInt& Polynomial::at(std::size_t k) const {
    return k < coeff.size() ? coeff[k] : kZero;
}

BigInt Polynomial::evaluate(long long x) const {
    BigInt acc{0};
    BigInt bx{x};
    for (std::size_t k = coeff.size(); k-- > 0;) acc = acc * bx + coeff[k];
    return acc;
}

std::string Polynomial::to_string() const {
    if (coeff.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        if (coeff[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (k == 0) {
            out += coeff[k].to_string();
        } else {
            if (coeff[k] != BigInt{1}) out += coeff[k].to_string();
            out += "x";
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

Graph make_graph(std::uint32_t n,
                 const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    if (n > VSet::kCapacity)
        throw invalid_input("make_graph: at most " + std::to_string(VSet::kCapacity) +
                            " vertices are supported");
    Graph g;
    g.n = n;
    g.edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw invalid_input("make_graph: loop at vertex " + std::to_string(u));
        if (u >= n || v >= n)
            throw invalid_input("make_graph: endpoint out of range: (" + std::to_string(u) +
                                "," + std::to_string(v) + ") with n=" + std::to_string(n));
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    rebuild_adjacency(g);
    return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = a.edges;
    for (auto [u, v] : b.edges) edges.emplace_back(u + a.n, v + a.n);
    return make_graph(a.n + b.n, edges);
}

Graph complete_graph(std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

Graph complete_bipartite(std::uint32_t m, std::uint32_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < m; ++u)
        for (std::uint32_t v = 0; v < n; ++v) edges.emplace_back(u, m + v);
    return make_graph(m + n, edges);
}

Graph cycle_graph(std::uint32_t n) {
    if (n < 3) throw invalid_input("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return make_graph(n, edges);
}

Graph path_graph(std::uint32_t edge_count) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 0; v < edge_count; ++v) edges.emplace_back(v, v + 1);
    return make_graph(edge_count + 1, edges);
}

Graph star_graph(std::uint32_t leaves) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t v = 1; v <= leaves; ++v) edges.emplace_back(0u, v);
    return make_graph(leaves + 1, edges);
}

Graph star_triangle(std::uint32_t triangles) {
    if (triangles == 0) throw invalid_input("star_triangle: need at least one triangle");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t t = 0; t < triangles; ++t) {
        std::uint32_t a = 1 + 2 * t, b = 2 + 2 * t;
        edges.emplace_back(0u, a);
        edges.emplace_back(0u, b);
        edges.emplace_back(a, b);
    }
    return make_graph(2 * triangles + 1, edges);
}

Graph cameron_walker_graph(const CWParams& params) {
    const Graph& base = params.base;
    if (base.n == 0) throw invalid_input("cameron_walker_graph: empty base");
    if (!is_connected(base)) throw invalid_input("cameron_walker_graph: base must be connected");

    VSet xset;
    for (std::uint32_t x : params.part_x) {
        if (x >= base.n) throw invalid_input("cameron_walker_graph: X vertex out of range");
        xset.set(x);
    }
    for (auto [u, v] : base.edges)
        if (xset.test(u) == xset.test(v))
            throw invalid_input("cameron_walker_graph: base is not bipartite with parts (X, Y)");

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = base.edges;
    std::uint32_t next = base.n;

    for (std::uint32_t x : params.part_x) {
        auto it = params.leaf_mult.find(x);
        std::uint32_t mult = it == params.leaf_mult.end() ? 0 : it->second;
        if (mult == 0)
            throw invalid_input("cameron_walker_graph: X vertex " + std::to_string(x) +
                                " needs at least one leaf edge");
        for (std::uint32_t k = 0; k < mult; ++k) edges.emplace_back(x, next++);
    }
    for (auto [y, mult] : params.triangle_mult) {
        if (y >= base.n || xset.test(y))
            throw invalid_input("cameron_walker_graph: pendant triangles attach to Y vertices only");
        for (std::uint32_t k = 0; k < mult; ++k) {
            std::uint32_t a = next++, b = next++;
            edges.emplace_back(y, a);
            edges.emplace_back(y, b);
            edges.emplace_back(a, b);
        }
    }
    return make_graph(next, edges);
}

std::pair<Graph, std::vector<EdgeLabel>> line_graph(const Graph& h) {
    std::vector<EdgeLabel> labels;
    labels.reserve(h.edges.size());
    for (std::uint32_t i = 0; i < h.edges.size(); ++i)
        labels.push_back(EdgeLabel{i, h.edges[i].first, h.edges[i].second});

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < labels.size(); ++i)
        for (std::uint32_t j = i + 1; j < labels.size(); ++j) {
            const EdgeLabel&a = labels[i], &b = labels[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) edges.emplace_back(i, j);
        }
    return {make_graph(static_cast<std::uint32_t>(labels.size()), edges), std::move(labels)};
}

Graph complement(const Graph& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < g.n; ++u)
        for (std::uint32_t v = u + 1; v < g.n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return make_graph(g.n, edges);
}

std::optional<std::uint32_t> girth(const Graph& g) {
    // BFS from every vertex; every non-tree adjacency (u,v) closes a walk of
    // length dist[u] + dist[v] + 1 through the root, never shorter than the
    // girth, and a root on a shortest cycle realizes it exactly.
    std::uint32_t best = 0xffffffff;
    std::vector<std::uint32_t> dist(g.n), parent(g.n);
    for (std::uint32_t s = 0; s < g.n; ++s) {
        std::fill(dist.begin(), dist.end(), 0xffffffff);
        std::vector<std::uint32_t> queue{s};
        dist[s] = 0;
        parent[s] = s;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::uint32_t u = queue[head];
            g.adj[u].for_each([&](std::uint32_t v) {
                if (dist[v] == 0xffffffff) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u] && u != parent[v]) {
                    best = std::min(best, dist[v] + dist[u] + 1);
                }
            });
        }
    }
    if (best == 0xffffffff) return std::nullopt;
    return best;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    VSet seen = VSet::singleton(0);
    std::vector<std::uint32_t> stack{0};
    while (!stack.empty()) {
        std::uint32_t u = stack.back();
        stack.pop_back();
        g.adj[u].for_each([&](std::uint32_t v) {
            if (!seen.test(v)) {
                seen.set(v);
                stack.push_back(v);
            }
        });
    }
    return seen.count() == g.n;
}

Graph induced_subgraph(const Graph& g, const VSet& keep, std::vector<std::uint32_t>* vertex_map) {
    std::vector<std::uint32_t> verts = keep.elements();
    std::unordered_map<std::uint32_t, std::uint32_t> index;
    for (std::uint32_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (auto [u, v] : g.edges)
        if (keep.test(u) && keep.test(v)) edges.emplace_back(index[u], index[v]);
    if (vertex_map) *vertex_map = verts;
    return make_graph(static_cast<std::uint32_t>(verts.size()), edges);
}

std::vector<Component> connected_components(const Graph& g) {
    std::vector<Component> out;
    VSet visited;
    for (std::uint32_t s = 0; s < g.n; ++s) {
        if (visited.test(s)) continue;
        VSet comp = VSet::singleton(s);
        std::vector<std::uint32_t> stack{s};
        while (!stack.empty()) {
            std::uint32_t u = stack.back();
            stack.pop_back();
            g.adj[u].for_each([&](std::uint32_t v) {
                if (!comp.test(v)) {
                    comp.set(v);
                    stack.push_back(v);
                }
            });
        }
        visited |= comp;
        Component c;
        c.graph = induced_subgraph(g, comp, &c.vertex_map);
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

struct MatchingSearch {
    const Graph& g;
    std::uint32_t best = 0;

    explicit MatchingSearch(const Graph& graph) : g(graph) {}

    void run(std::uint32_t v, VSet covered, std::uint32_t count) {
        while (v < g.n && covered.test(v)) ++v;
        std::uint32_t free_left = 0;
        for (std::uint32_t u = v; u < g.n; ++u)
            if (!covered.test(u)) ++free_left;
        if (count + free_left / 2 <= best) {
            best = std::max(best, count);
            return;
        }
        if (v >= g.n) {
            best = std::max(best, count);
            return;
        }
        VSet candidates = g.adj[v].minus(covered);
        candidates.for_each([&](std::uint32_t u) {
            VSet next = covered;
            next.set(v);
            next.set(u);
            run(v + 1, next, count + 1);
        });
        run(v + 1, covered, count);  // v stays unmatched
    }
};

} // namespace

std::uint32_t max_matching_size(const Graph& h) {
    MatchingSearch search(h);
    search.run(0, VSet{}, 0);
    return search.best;
}

std::uint32_t max_induced_matching_size(const Graph& h) {
    const std::uint32_t m = h.edge_count();
    // conflict zone of edge (a,b): both endpoints plus all their neighbors;
    // edges meeting the zone cannot share an induced matching with (a,b).
    std::vector<VSet> zone(m), conflicts(m);
    std::vector<VSet> endpoints(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        auto [a, b] = h.edges[i];
        zone[i] = h.adj[a] | h.adj[b];
        zone[i].set(a);
        zone[i].set(b);
        endpoints[i].set(a);
        endpoints[i].set(b);
    }
    for (std::uint32_t i = 0; i < m; ++i)
        for (std::uint32_t j = 0; j < m; ++j)
            if (i != j && zone[i].intersects(endpoints[j])) conflicts[i].set(j);

    std::uint32_t best = 0;
    // max independent set over the conflict relation
    auto rec = [&](auto&& self, std::uint32_t e, VSet excluded, std::uint32_t count) -> void {
        while (e < m && excluded.test(e)) ++e;
        std::uint32_t avail = 0;
        for (std::uint32_t f = e; f < m; ++f)
            if (!excluded.test(f)) ++avail;
        if (count + avail <= best) return;
        if (e >= m) {
            best = std::max(best, count);
            return;
        }
        self(self, e + 1, excluded | conflicts[e] | VSet::singleton(e), count + 1);
        self(self, e + 1, excluded | VSet::singleton(e), count);
    };
    rec(rec, 0, VSet{}, 0);
    return best;
}

bool has_perfect_matching(const Graph& h) {
    return h.n % 2 == 0 && 2 * max_matching_size(h) == h.n;
}

namespace {

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    out.coeff.resize(std::max(a.coeff.size(), b.coeff.size()), BigInt{0});
    for (std::size_t k = 0; k < out.coeff.size(); ++k) out.coeff[k] = a.at(k) + b.at(k);
    while (!out.coeff.empty() && out.coeff.back().is_zero()) out.coeff.pop_back();
    return out;
}

Polynomial poly_shift(const Polynomial& a) {
    if (a.coeff.empty()) return a;
    Polynomial out;
    out.coeff.assign(a.coeff.size() + 1, BigInt{0});
    for (std::size_t k = 0; k < a.coeff.size(); ++k) out.coeff[k + 1] = a.coeff[k];
    return out;
}

struct IndepPolyCtx {
    const Graph& g;
    std::unordered_map<VSet, Polynomial, VSetHash> memo;

    // I(S) = I(S - v) + x * I(S - N[v]) with v of maximum degree inside S.
    Polynomial compute(const VSet& s) {
        if (s.empty()) return Polynomial{{BigInt{1}}};
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;

        std::uint32_t pick = VSet::kCapacity, pick_deg = 0;
        s.for_each([&](std::uint32_t v) {
            std::uint32_t d = (g.adj[v] & s).count();
            if (pick == VSet::kCapacity || d > pick_deg) {
                pick = v;
                pick_deg = d;
            }
        });
        VSet without = s;
        without.reset(pick);
        VSet closed = s.minus(g.adj[pick]);
        closed.reset(pick);
        Polynomial result = poly_add(compute(without), poly_shift(compute(closed)));
        memo.emplace(s, result);
        return result;
    }
};

} // namespace

Polynomial independence_polynomial(const Graph& g) {
    IndepPolyCtx ctx{g, {}};
    return ctx.compute(VSet::first_n(g.n));
}

} // namespace mcx
