#include "mcx/classify.hpp"

#include <algorithm>
#include <numeric>

#include "mcx/complex.hpp"

namespace mcx {

namespace {

void require_connected(const Graph& h, const char* who) {
    if (!is_connected(h)) throw invalid_input(std::string(who) + ": input must be connected");
}

// Brute-force isomorphism for reference-graph checks; fine for n <= 10.
bool isomorphic_small(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    std::vector<std::uint32_t> da(a.n), db(b.n);
    for (std::uint32_t v = 0; v < a.n; ++v) da[v] = a.degree(v);
    for (std::uint32_t v = 0; v < b.n; ++v) db[v] = b.degree(v);
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<std::uint32_t> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::uint32_t v = 0; v < a.n && ok; ++v)
            if (da[v] != db[perm[v]]) ok = false;
        for (auto [u, v] : a.edges) {
            if (!ok) break;
            if (!b.has_edge(perm[u], perm[v])) ok = false;
        }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

} // namespace

bool is_star(const Graph& h) {
    require_connected(h, "is_star");
    if (h.n == 1) return true;
    if (h.edge_count() != h.n - 1) return false;
    for (std::uint32_t c = 0; c < h.n; ++c)
        if (h.degree(c) == h.n - 1) return true;
    return false;
}

bool is_star_triangle(const Graph& h) {
    require_connected(h, "is_star_triangle");
    if (h.n < 3 || h.n % 2 == 0) return false;
    std::uint32_t t = (h.n - 1) / 2;
    if (h.edge_count() != 3 * t) return false;
    // locate the common vertex
    std::uint32_t center = h.n;
    for (std::uint32_t v = 0; v < h.n; ++v)
        if (h.degree(v) == 2 * t) {
            center = v;
            break;
        }
    if (t == 1) center = 0;  // K_3: every vertex serves
    if (center == h.n) return false;
    VSet seen;
    for (std::uint32_t v = 0; v < h.n; ++v) {
        if (v == center || seen.test(v)) continue;
        if (h.degree(v) != 2 || !h.has_edge(v, center)) return false;
        VSet partner_set = h.adj[v];
        partner_set.reset(center);
        if (partner_set.count() != 1) return false;
        std::uint32_t w = partner_set.lowest();
        if (w == center || h.degree(w) != 2 || !h.has_edge(w, center)) return false;
        seen.set(v);
        seen.set(w);
    }
    return true;
}

std::optional<CWDecomposition> cameron_walker_decompose(const Graph& h) {
    require_connected(h, "cameron_walker_decompose");
    if (is_star(h) || is_star_triangle(h)) return std::nullopt;

    CWDecomposition d;
    VSet removed;  // degree-2 vertices of peeled triangles
    VSet attachments;

    // Pendant triangles: two degree-2 vertices plus an attachment of larger
    // degree.  The degree-2 pair has no edges outside its triangle, so
    // peeling in ascending label order is well defined.
    for (std::uint32_t v = 0; v < h.n; ++v) {
        if (removed.test(v) || h.degree(v) != 2) continue;
        auto nb = h.adj[v].elements();
        for (std::uint32_t w : nb) {
            if (w <= v || h.degree(w) != 2 || !h.has_edge(v, w)) continue;
            VSet common = h.adj[v] & h.adj[w];
            if (common.count() != 1) continue;
            std::uint32_t a = common.lowest();
            if (h.degree(a) <= 2) continue;
            d.pendant_triangles[a].push_back({a, v, w});
            removed.set(v);
            removed.set(w);
            attachments.set(a);
            break;
        }
    }

    // Residual graph: base plus leaf edges.
    VSet residual = VSet::first_n(h.n).minus(removed);
    VSet leaves, xset;
    residual.for_each([&](std::uint32_t v) {
        std::uint32_t deg = (h.adj[v] & residual).count();
        if (deg == 1 && !attachments.test(v)) leaves.set(v);
    });
    if (leaves.empty()) return std::nullopt;
    bool bad = false;
    leaves.for_each([&](std::uint32_t leaf) {
        VSet nb = h.adj[leaf] & residual;
        if (nb.count() != 1) {
            bad = true;
            return;
        }
        std::uint32_t x = nb.lowest();
        if (leaves.test(x)) {
            bad = true;  // two adjacent leaves: the K_2 case, already a star
            return;
        }
        xset.set(x);
        d.leaf_edges[x].push_back({x, leaf});
    });
    if (bad) return std::nullopt;
    if (xset.intersects(attachments)) return std::nullopt;  // triangles must hang off Y

    VSet yset = residual.minus(leaves).minus(xset);
    if (!attachments.is_subset_of(yset)) return std::nullopt;

    // Base structure: edges inside X union Y must cross the bipartition,
    // the base must be connected, and nothing else may remain.
    VSet baseset = xset | yset;
    for (auto [u, v] : h.edges) {
        bool bu = baseset.test(u), bv = baseset.test(v);
        if (bu && bv) {
            if (xset.test(u) == xset.test(v)) return std::nullopt;
            d.base_edges.emplace_back(u, v);
        }
    }
    if (xset.empty()) return std::nullopt;
    Graph base = induced_subgraph(h, baseset);
    if (!is_connected(base)) return std::nullopt;

    d.x = xset.elements();
    d.y = yset.elements();
    return d;
}

bool has_im_eq_m(const Graph& h) {
    require_connected(h, "has_im_eq_m");
    return max_induced_matching_size(h) == max_matching_size(h);
}

namespace {

const Graph& ref_c5() {
    static const Graph g = cycle_graph(5);
    return g;
}
const Graph& ref_k23() {
    static const Graph g = complete_bipartite(2, 3);
    return g;
}

std::string component_kind(const Graph& c) {
    if (c.n == 1) return "vertex";
    if (c.n == 2 && c.edge_count() == 1) return "edge";
    if (c.n == 3 && c.edge_count() == 2) return "path2";
    if (c.n == 5 && c.edge_count() == 5 && isomorphic_small(c, ref_c5())) return "c5";
    if (c.n == 5 && c.edge_count() == 6 && isomorphic_small(c, ref_k23())) return "k23";
    return "other";
}

} // namespace

GorensteinClassification gorenstein_classifier_report(const Graph& h) {
    GorensteinClassification out{true, false, {}};
    for (const Component& comp : connected_components(h)) {
        std::string kind = component_kind(comp.graph);
        if (kind == "vertex") out.has_isolated_vertices = true;
        if (kind == "other") out.verdict = false;
        out.component_kinds.push_back(std::move(kind));
    }
    return out;
}

bool gorenstein_classifier(const Graph& h) { return gorenstein_classifier_report(h).verdict; }

bool girth5_cm_classifier(const Graph& h) {
    require_connected(h, "girth5_cm_classifier");
    auto g = girth(h);
    if (g && *g < 5)
        throw invalid_input("girth5_cm_classifier: girth " + std::to_string(*g) +
                            " is outside the hypothesis girth >= 5");
    if (h.n == 5 && h.edge_count() == 5 && isomorphic_small(h, ref_c5())) return true;
    if (is_star(h)) return true;
    return cameron_walker_decompose(h).has_value();
}

KnPredicates kn_predicates(std::uint32_t n) {
    if (n < 2) throw invalid_input("kn_predicates: n >= 2 required");
    return KnPredicates{n % 2 == 1 || n == 2, n <= 3 || n == 5};
}

KmnPredicates kmn_predicates(std::uint32_t m, std::uint32_t n) {
    if (m < 1 || m > n) throw invalid_input("kmn_predicates: need 1 <= m <= n");
    bool sc = m == 1 ? true : n != m;
    Tri cm = Tri::Indeterminate;
    if (m < 5) cm = n >= 2 * m - 1 ? Tri::True : Tri::False;
    return KmnPredicates{sc, cm};
}

AmSearchResult a_m_search(std::uint32_t m, const AmCriterion& criterion, std::uint32_t n_max,
                          DecisionCache* cache, std::uint64_t budget) {
    if (m < 1) throw invalid_input("a_m_search: m >= 1 required");
    AmSearchResult out;
    for (std::uint32_t n = m + 1; n <= n_max; ++n) {
        SimplicialComplex cx = matching_complex(complete_bipartite(m, n));
        Tri verdict = Tri::False;
        switch (criterion.kind) {
            case AmCriterion::Kind::vertex_decomposable:
                verdict = is_vertex_decomposable(cx, cache, budget).value;
                break;
            case AmCriterion::Kind::shellable:
                verdict = is_shellable(cx, budget).value;
                break;
            case AmCriterion::Kind::cohen_macaulay:
                verdict = is_cohen_macaulay(cx, criterion.field, cache) ? Tri::True : Tri::False;
                break;
        }
        if (verdict == Tri::True) {
            out.found = n;
            return out;
        }
        if (verdict == Tri::Indeterminate) {
            out.indeterminate = true;
            return out;
        }
    }
    return out;
}

ClassReport classify_graph(const Graph& h) {
    ClassReport r{};
    r.connected = is_connected(h);
    GorensteinClassification g = gorenstein_classifier_report(h);
    r.gorenstein_graph = g.verdict;
    if (g.has_isolated_vertices)
        r.notes.push_back("isolated-vertex components counted as paths of length 0");
    if (r.connected) {
        r.star = is_star(h);
        r.star_triangle = is_star_triangle(h);
        auto d = cameron_walker_decompose(h);
        r.cameron_walker = d.has_value();
        r.decomposition = std::move(d);
        r.im_eq_m = has_im_eq_m(h);
        if (h.n == 2 && h.edge_count() == 1)
            r.notes.push_back("K_2 is classified as a star (it is also a path)");
        auto gr = girth(h);
        if (!gr || *gr >= 5) r.girth5_cm = girth5_cm_classifier(h);
    }
    return r;
}

} // namespace mcx
