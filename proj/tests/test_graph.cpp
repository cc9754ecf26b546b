#include <doctest.h>

#include <random>
#include <set>

#include "mcx/enumerate.hpp"
#include "mcx/graph.hpp"
#include "oracles.hpp"

using namespace mcx;

namespace {

Graph random_graph(std::mt19937& rng, std::uint32_t n, double density_percent) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v)
            if (rng() % 100 < density_percent) edges.emplace_back(u, v);
    return make_graph(n, edges);
}

} // namespace

TEST_CASE("make_graph normalizes and validates") {
    Graph p3 = make_graph(3, {{0, 1}, {1, 2}});
    CHECK(p3.edge_count() == 2);
    CHECK(make_graph(1, {}).edge_count() == 0);
    CHECK(make_graph(4, {{0, 1}, {1, 0}, {2, 3}}).edge_count() == 2);
    CHECK_THROWS_AS(make_graph(3, {{0, 0}}), invalid_input);
    CHECK_THROWS_AS(make_graph(3, {{0, 5}}), invalid_input);
}

TEST_CASE("generators match their stated shapes") {
    Graph st2 = star_triangle(2);
    CHECK(st2.n == 5);
    CHECK(st2.edge_count() == 6);
    // two triangles sharing exactly one vertex
    CHECK(st2.degree(0) == 4);

    Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.n == 5);
    CHECK(k23.edge_count() == 6);

    CHECK(path_graph(0).n == 1);
    CHECK(star_graph(0).n == 1);
    CHECK_THROWS_AS(cycle_graph(2), invalid_input);
    CHECK_THROWS_AS(star_triangle(0), invalid_input);
}

TEST_CASE("cameron_walker generator: smallest instance") {
    CWParams params;
    params.base = make_graph(2, {{0, 1}});
    params.part_x = {0};
    params.leaf_mult[0] = 1;
    params.triangle_mult[1] = 1;
    Graph g = cameron_walker_graph(params);
    // base edge + leaf at x + pendant triangle at y
    CHECK(g.n == 5);
    CHECK(g.edge_count() == 5);
    CHECK(max_induced_matching_size(g) == max_matching_size(g));
    CHECK(oracles::max_induced_matching_brute(g) == max_matching_size(g));

    params.leaf_mult[0] = 0;
    CHECK_THROWS_AS(cameron_walker_graph(params), invalid_input);
}

TEST_CASE("line graphs of the reference graphs") {
    auto [lp3, labels3] = line_graph(path_graph(2));
    CHECK(lp3.n == 2);
    CHECK(lp3.edge_count() == 1);  // K_2
    CHECK(labels3.size() == 2);

    auto [lk2, labels2] = line_graph(path_graph(1));
    CHECK(lk2.n == 1);
    CHECK(lk2.edge_count() == 0);  // K_1

    // L(K_{2,3}) is the complement of a 6-cycle (the triangular prism)
    auto [lk23, labels23] = line_graph(complete_bipartite(2, 3));
    CHECK(oracles::isomorphic_brute(lk23, complement(cycle_graph(6))));
}

TEST_CASE("line graph degree law") {
    std::mt19937 rng(11);
    for (int iter = 0; iter < 20; ++iter) {
        Graph h = random_graph(rng, 3 + rng() % 6, 50);
        auto [lg, labels] = line_graph(h);
        for (const EdgeLabel& e : labels)
            CHECK(lg.degree(e.index) == h.degree(e.u) + h.degree(e.v) - 2);
    }
}

TEST_CASE("removing matched vertices commutes with the line graph") {
    // L(H - V(F)) is isomorphic to L(H) - N[F] for every edge subset F
    for (const Graph& h : {complete_graph(4), complete_bipartite(2, 3), cycle_graph(5),
                           path_graph(4), star_triangle(2)}) {
        auto [lg, labels] = line_graph(h);
        std::uint32_t m = h.edge_count();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<std::uint32_t> f;
            for (std::uint32_t e = 0; e < m; ++e)
                if (mask & (1u << e)) f.push_back(e);
            // H minus the endpoints of F
            VSet removed_vertices;
            for (std::uint32_t e : f) {
                removed_vertices.set(labels[e].u);
                removed_vertices.set(labels[e].v);
            }
            Graph hf = induced_subgraph(h, VSet::first_n(h.n).minus(removed_vertices));
            // L(H) minus closed neighborhoods of F
            VSet removed_lg;
            for (std::uint32_t e : f) {
                removed_lg.set(e);
                removed_lg |= lg.adj[e];
            }
            Graph gf = induced_subgraph(lg, VSet::first_n(lg.n).minus(removed_lg));
            CHECK(oracles::isomorphic_brute(line_graph(hf).first, gf));
        }
    }
}

TEST_CASE("complement basics") {
    CHECK(complement(complete_graph(3)).edge_count() == 0);
    CHECK(oracles::isomorphic_brute(complement(cycle_graph(5)), cycle_graph(5)));
    std::mt19937 rng(5);
    for (int iter = 0; iter < 20; ++iter) {
        Graph g = random_graph(rng, 2 + rng() % 8, 40);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("girth") {
    CHECK(girth(cycle_graph(5)) == 5);
    CHECK(girth(complete_bipartite(3, 3)) == 4);
    CHECK(!girth(path_graph(4)).has_value());
    CHECK(!girth(star_graph(5)).has_value());
    CHECK(girth(complete_graph(4)) == 3);
    // a 5-cycle with a pendant path keeps girth 5
    Graph g = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {5, 6}});
    CHECK(girth(g) == 5);
}

TEST_CASE("girth against the delete-edge shortest-path oracle") {
    // girth = 1 + min over edges uv of dist(u, v) in g - uv
    auto oracle_girth = [](const Graph& g) -> std::optional<std::uint32_t> {
        std::uint32_t best = 0xffffffff;
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            auto [s, t] = g.edges[e];
            std::vector<std::uint32_t> dist(g.n, 0xffffffff);
            std::vector<std::uint32_t> queue{s};
            dist[s] = 0;
            for (std::size_t head = 0; head < queue.size(); ++head) {
                std::uint32_t u = queue[head];
                g.adj[u].for_each([&](std::uint32_t v) {
                    if (u == s && v == t) return;  // skip the removed edge
                    if (u == t && v == s) return;
                    if (dist[v] == 0xffffffff) {
                        dist[v] = dist[u] + 1;
                        queue.push_back(v);
                    }
                });
            }
            if (dist[t] != 0xffffffff) best = std::min(best, dist[t] + 1);
        }
        if (best == 0xffffffff) return std::nullopt;
        return best;
    };
    std::mt19937 rng(13);
    for (int iter = 0; iter < 60; ++iter) {
        Graph g = random_graph(rng, 3 + rng() % 7, 15 + rng() % 50);
        CHECK(girth(g) == oracle_girth(g));
    }
    for (const Graph& g : connected_graphs_upto_iso(6)) CHECK(girth(g) == oracle_girth(g));
}

TEST_CASE("girth is infinite exactly for forests") {
    std::mt19937 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        Graph g = random_graph(rng, 2 + rng() % 7, 35);
        bool acyclic = true;
        for (const Component& c : connected_components(g))
            if (c.graph.edge_count() >= c.graph.n) acyclic = false;
        CHECK(girth(g).has_value() == !acyclic);
    }
}

TEST_CASE("connected components") {
    Graph g = disjoint_union(path_graph(2), cycle_graph(5));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.n == 3);
    CHECK(comps[1].graph.n == 5);
    CHECK(comps[1].vertex_map.size() == 5);

    CHECK(connected_components(complete_graph(4)).size() == 1);
    CHECK(connected_components(make_graph(4, {})).size() == 4);
}

TEST_CASE("matching numbers on the named examples") {
    CHECK(max_matching_size(complete_graph(4)) == 2);
    CHECK(max_matching_size(cycle_graph(5)) == 2);
    CHECK(max_matching_size(complete_bipartite(3, 5)) == 3);

    CHECK(max_induced_matching_size(cycle_graph(5)) == 1);
    CHECK(oracles::max_induced_matching_brute(cycle_graph(5)) == 1);
    CHECK(max_induced_matching_size(star_graph(4)) == 1);
    CHECK(max_induced_matching_size(path_graph(5)) == 2);
    CHECK(oracles::max_induced_matching_brute(path_graph(5)) == 2);
}

TEST_CASE("im <= m; equality on the structured generator families") {
    std::mt19937 rng(31);
    for (int iter = 0; iter < 25; ++iter) {
        Graph g = random_graph(rng, 3 + rng() % 6, 45);
        CHECK(max_induced_matching_size(g) <= max_matching_size(g));
        CHECK(max_induced_matching_size(g) == oracles::max_induced_matching_brute(g));
    }
    for (std::uint32_t k = 1; k <= 5; ++k)
        CHECK(max_induced_matching_size(star_graph(k)) == max_matching_size(star_graph(k)));
    for (std::uint32_t t = 1; t <= 4; ++t)
        CHECK(max_induced_matching_size(star_triangle(t)) == max_matching_size(star_triangle(t)));
    CWParams params;
    params.base = make_graph(4, {{0, 2}, {0, 3}, {1, 3}});
    params.part_x = {0, 1};
    params.leaf_mult[0] = 2;
    params.leaf_mult[1] = 1;
    params.triangle_mult[2] = 1;
    Graph cw = cameron_walker_graph(params);
    CHECK(max_induced_matching_size(cw) == max_matching_size(cw));
}

TEST_CASE("independence polynomial") {
    CHECK(independence_polynomial(path_graph(0)).to_string() == "1 + x");
    CHECK(independence_polynomial(complete_graph(3)).to_string() == "1 + 3x");

    // counts independent sets by size: verify against subset enumeration
    std::mt19937 rng(41);
    for (int iter = 0; iter < 15; ++iter) {
        Graph g = random_graph(rng, 2 + rng() % 10, 40);
        Polynomial p = independence_polynomial(g);
        auto sets = oracles::all_independent_sets(g);
        long long total = 0;
        CHECK(p.evaluate(1) == BigInt{static_cast<long long>(sets.size())});
        std::vector<long long> by_size(g.n + 1, 0);
        for (const auto& s : sets) ++by_size[s.size()];
        for (std::size_t k = 0; k < by_size.size(); ++k) {
            CHECK(p.at(k) == BigInt{by_size[k]});
            total += by_size[k];
        }
        (void)total;
    }
}

TEST_CASE("perfect matchings") {
    CHECK(has_perfect_matching(complete_graph(4)));
    CHECK(!has_perfect_matching(cycle_graph(5)));
    CHECK(!has_perfect_matching(complete_bipartite(2, 3)));
}

TEST_CASE("the unique connected 6-edge graph whose line graph is the 6-cycle complement") {
    // pins the Gorenstein classifier's five-vertex component to K_{2,3}
    Graph prism = complement(cycle_graph(6));
    std::uint32_t hits = 0;
    for (std::uint32_t n = 2; n <= 7; ++n)
        for (const Graph& h : connected_graphs_upto_iso(n)) {
            if (h.edge_count() != 6) continue;
            if (oracles::isomorphic_brute(line_graph(h).first, prism)) {
                ++hits;
                CHECK(oracles::isomorphic_brute(h, complete_bipartite(2, 3)));
            }
        }
    CHECK(hits == 1);
}

TEST_CASE("graph size cap") {
    CHECK_THROWS_AS(make_graph(300, {}), invalid_input);
}

TEST_CASE("enumeration counts match the catalog values") {
    const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112, 853};
    for (std::uint32_t n = 1; n <= 7; ++n)
        CHECK(connected_graphs_upto_iso(n).size() == connected[n - 1]);
    const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156};
    for (std::uint32_t n = 1; n <= 6; ++n) CHECK(all_graphs_upto_iso(n).size() == all[n - 1]);
}

TEST_CASE("enumerated representatives are pairwise non-isomorphic and valid") {
    auto graphs = connected_graphs_upto_iso(6);
    for (const Graph& g : graphs) CHECK(is_connected(g));
    std::set<std::uint64_t> codes;
    for (const Graph& g : graphs) CHECK(codes.insert(canonical_code(g)).second);
    // canonical codes are isomorphism invariants
    std::mt19937 rng(77);
    for (int iter = 0; iter < 30; ++iter) {
        const Graph& g = graphs[rng() % graphs.size()];
        std::vector<std::uint32_t> perm(g.n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
        for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
        CHECK(canonical_code(make_graph(g.n, edges)) == canonical_code(g));
    }
}

TEST_CASE("girth-constrained enumeration agrees with filtering") {
    // the augmentation with pairwise-distance >= 3 neighbor sets must reach
    // exactly the girth >= 5 classes
    for (std::uint32_t n = 1; n <= 7; ++n) {
        std::size_t filtered = 0;
        for (const Graph& h : connected_graphs_upto_iso(n)) {
            auto g = girth(h);
            if (!g || *g >= 5) ++filtered;
        }
        CHECK(connected_girth5_graphs_upto_iso(n).size() == filtered);
    }
    for (const Graph& h : connected_girth5_graphs_upto_iso(8)) {
        auto g = girth(h);
        CHECK((!g || *g >= 5));
        CHECK(is_connected(h));
    }
}

TEST_CASE("girth-5 corpus at eight vertices against the full catalog") {
    auto all8 = connected_graphs_upto_iso(8);
    CHECK(all8.size() == 11117);
    std::size_t filtered = 0;
    for (const Graph& h : all8) {
        auto g = girth(h);
        if (!g || *g >= 5) ++filtered;
    }
    CHECK(connected_girth5_graphs_upto_iso(8).size() == filtered);
}
