#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "mcx/complex.hpp"
#include "mcx/enumerate.hpp"
#include "oracles.hpp"

using namespace mcx;

namespace {

VSet face(std::initializer_list<std::uint32_t> vs) {
    VSet f;
    for (auto v : vs) f.set(v);
    return f;
}

std::set<std::set<std::uint32_t>> facet_sets(const SimplicialComplex& c) {
    std::set<std::set<std::uint32_t>> out;
    for (const VSet& f : c.facets) {
        std::set<std::uint32_t> s;
        f.for_each([&](std::uint32_t v) { s.insert(v); });
        out.insert(std::move(s));
    }
    return out;
}

// all faces as a set, by downward closure
std::set<std::set<std::uint32_t>> face_closure(const SimplicialComplex& c) {
    std::set<std::set<std::uint32_t>> out;
    for (const auto& group : faces_by_size(c))
        for (const VSet& f : group) {
            std::set<std::uint32_t> s;
            f.for_each([&](std::uint32_t v) { s.insert(v); });
            out.insert(std::move(s));
        }
    return out;
}

SimplicialComplex random_complex(std::mt19937& rng) {
    std::uint32_t ground = 1 + rng() % 10;
    std::vector<VSet> faces;
    std::uint32_t nf = 1 + rng() % 6;
    for (std::uint32_t i = 0; i < nf; ++i) {
        VSet f;
        std::uint32_t sz = rng() % std::min(ground + 1, 5u);
        for (std::uint32_t k = 0; k < sz; ++k) f.set(rng() % ground);
        faces.push_back(f);
    }
    return make_complex(ground, std::move(faces));
}

} // namespace

TEST_CASE("construction: antichain normalization and the void complex") {
    SimplicialComplex c = make_complex(4, {face({0, 1}), face({0}), face({2})});
    CHECK(c.facets.size() == 2);
    CHECK(c.has_face(face({0})));
    CHECK_THROWS_AS(make_complex(3, {}), invalid_input);
    CHECK(empty_complex().dim() == -1);
    CHECK(empty_complex().is_simplex());
}

TEST_CASE("independence complexes of the small references") {
    CHECK(facet_sets(independence_complex(make_graph(3, {}))) ==
          std::set<std::set<std::uint32_t>>{{0, 1, 2}});
    CHECK(facet_sets(independence_complex(complete_graph(3))) ==
          std::set<std::set<std::uint32_t>>{{0}, {1}, {2}});
    CHECK(facet_sets(independence_complex(cycle_graph(4))) ==
          std::set<std::set<std::uint32_t>>{{0, 2}, {1, 3}});
}

TEST_CASE("matching complexes against direct matching enumeration") {
    for (const Graph& h : {path_graph(2), complete_graph(4), cycle_graph(5), path_graph(3),
                           complete_bipartite(2, 3), star_triangle(2)}) {
        SimplicialComplex cx = matching_complex(h);
        // the face set must be exactly the set of matchings
        auto got = face_closure(cx);
        std::set<std::set<std::uint32_t>> want;
        for (const auto& m : oracles::all_matchings(h)) want.insert({m.begin(), m.end()});
        CHECK(got == want);
    }
    SimplicialComplex mp3 = matching_complex(path_graph(2));
    CHECK(mp3.facets.size() == 2);  // two points
    SimplicialComplex mk4 = matching_complex(complete_graph(4));
    CHECK(mk4.facets.size() == 3);
    CHECK(mk4.dim() == 1);
    SimplicialComplex mc5 = matching_complex(cycle_graph(5));
    CHECK(mc5.dim() == 1);
    CHECK(mc5.facets.size() == 5);
}

TEST_CASE("link") {
    SimplicialComplex mk5 = matching_complex(complete_graph(5));
    // link of a facet is the empty complex
    CHECK(link(mk5, mk5.facets.front()).facets == empty_complex().facets);
    // the link of any edge vertex is the matching complex of K_3: three points
    mk5.used_vertices().for_each([&](std::uint32_t v) {
        SimplicialComplex lk = link(mk5, face({v}));
        CHECK(canonical_key(lk) == canonical_key(matching_complex(complete_graph(3))));
    });
    // link of the empty face is the complex itself
    CHECK(link(mk5, VSet{}) == mk5);
    CHECK_THROWS_AS(link(matching_complex(complete_graph(4)), face({0, 1})), invalid_input);
}

TEST_CASE("delete_vertex") {
    // deleting the apex of a cone leaves the base
    SimplicialComplex cone = make_complex(4, {face({0, 1, 3}), face({1, 2, 3})});
    SimplicialComplex base = delete_vertex(cone, 3);
    CHECK(facet_sets(base) == std::set<std::set<std::uint32_t>>{{0, 1}, {1, 2}});

    // M(K_4) minus one vertex: two facets stay, the third is absorbed
    SimplicialComplex mk4 = matching_complex(complete_graph(4));
    SimplicialComplex del = delete_vertex(mk4, 0);
    std::uint32_t size2 = 0, size1 = 0;
    for (const VSet& f : del.facets) {
        if (f.count() == 2) ++size2;
        if (f.count() == 1) ++size1;
    }
    CHECK(size2 == 2);
    CHECK(size1 == 1);

    // deleting an unused ground vertex changes nothing
    SimplicialComplex c = make_complex(5, {face({0, 1})});
    CHECK(delete_vertex(c, 4).facets == c.facets);
    CHECK_THROWS_AS(delete_vertex(c, 9), invalid_input);
}

TEST_CASE("star and core") {
    SimplicialComplex cone = make_complex(3, {face({0, 2}), face({1, 2})});
    CHECK(star(cone, 2) == cone);  // 2 lies in every facet
    SimplicialComplex simplex = make_complex(3, {face({0, 1, 2})});
    CHECK(core(simplex).facets == empty_complex().facets);
    SimplicialComplex mc5 = matching_complex(cycle_graph(5));
    CHECK(core(mc5) == mc5);  // every vertex misses some facet
    CHECK_THROWS_AS(star(make_complex(3, {face({0})}), 1), invalid_input);
}

TEST_CASE("purity and f-vectors") {
    CHECK(is_pure(matching_complex(complete_graph(4))));
    CHECK(!is_pure(matching_complex(path_graph(3))));
    CHECK(f_vector(matching_complex(cycle_graph(5))) == std::vector<std::uint64_t>{1, 5, 5});
    CHECK(is_pure(empty_complex()));
}

TEST_CASE("strong connectivity") {
    std::string why;
    CHECK(!is_strongly_connected(matching_complex(complete_graph(4)), &why));
    CHECK(why.find("3") != std::string::npos);  // three isolated facets
    CHECK(is_strongly_connected(matching_complex(complete_graph(5))));
    CHECK(is_strongly_connected(matching_complex(complete_bipartite(2, 3))));
    CHECK(is_strongly_connected(empty_complex()));
    // non-pure: false with a diagnostic
    why.clear();
    CHECK(!is_strongly_connected(matching_complex(path_graph(3)), &why));
    CHECK(why == "not pure");
    // 0-dimensional pure complexes are strongly connected
    CHECK(is_strongly_connected(matching_complex(star_graph(4))));
}

TEST_CASE("shedding vertices") {
    SimplicialComplex c = make_complex(4, {face({1, 2}), face({2, 3})});
    CHECK(is_shedding_vertex(c, 1));
    CHECK(!is_shedding_vertex(c, 2));
    CHECK_THROWS_AS(is_shedding_vertex(c, 0), invalid_input);

    // in M(K_{m,a}) with a > m every edge vertex is shedding
    for (auto [m, a] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 5}}) {
        SimplicialComplex cx = matching_complex(complete_bipartite(m, a));
        cx.used_vertices().for_each([&](std::uint32_t v) { CHECK(is_shedding_vertex(cx, v)); });
    }
    // counterexample at a = m
    SimplicialComplex k22 = matching_complex(complete_bipartite(2, 2));
    CHECK(!is_shedding_vertex(k22, 0));
}

TEST_CASE("face-set identities for link, deletion, star") {
    std::mt19937 rng(97);
    for (int iter = 0; iter < 40; ++iter) {
        SimplicialComplex c = random_complex(rng);
        VSet used = c.used_vertices();
        if (used.empty()) continue;
        std::uint32_t v = used.lowest();

        auto faces = face_closure(c);
        auto del_faces = face_closure(delete_vertex(c, v));
        auto link_faces = face_closure(link(c, VSet::singleton(v)));
        auto star_faces = face_closure(star(c, v));

        // faces(c) = faces(c - v) + {F + v : F in link(v)}
        std::set<std::set<std::uint32_t>> rebuilt = del_faces;
        for (auto f : link_faces) {
            f.insert(v);
            rebuilt.insert(std::move(f));
        }
        CHECK(rebuilt == faces);

        // star(v) union (c - v) = c and star(v) intersect (c - v) = link(v)
        std::set<std::set<std::uint32_t>> uni = star_faces, inter;
        for (const auto& f : del_faces) uni.insert(f);
        for (const auto& f : star_faces)
            if (del_faces.count(f)) inter.insert(f);
        CHECK(uni == faces);
        CHECK(inter == link_faces);
    }
}

TEST_CASE("matching complexes of graphs with perfect matchings are never strongly connected") {
    for (std::uint32_t n = 2; n <= 6; ++n)
        for (const Graph& h : all_graphs_upto_iso(n)) {
            if (!has_perfect_matching(h) || h.edge_count() == 0) continue;
            SimplicialComplex cx = matching_complex(h);
            if (cx.facets.size() < 2) continue;
            CHECK(!is_strongly_connected(cx));
        }
}

TEST_CASE("every maximal matching of a Cameron-Walker graph has size |X| + t") {
    std::mt19937 rng(3);
    for (int iter = 0; iter < 10; ++iter) {
        CWParams params;
        std::uint32_t nx = 1 + rng() % 2, ny = 1 + rng() % 2;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> base_edges;
        for (std::uint32_t x = 0; x < nx; ++x)
            base_edges.emplace_back(x, nx + rng() % ny);
        for (std::uint32_t y = 0; y < ny; ++y)
            base_edges.emplace_back(rng() % nx, nx + y);
        params.base = make_graph(nx + ny, base_edges);
        if (!is_connected(params.base)) continue;
        for (std::uint32_t x = 0; x < nx; ++x) params.part_x.push_back(x);
        std::uint32_t t = 0;
        for (std::uint32_t x = 0; x < nx; ++x) params.leaf_mult[x] = 1 + rng() % 2;
        for (std::uint32_t y = 0; y < ny; ++y) {
            params.triangle_mult[nx + y] = rng() % 2;
            t += params.triangle_mult[nx + y];
        }
        Graph h = cameron_walker_graph(params);
        if (h.edge_count() > 16) continue;
        std::uint32_t want = nx + t;
        for (const auto& m : oracles::maximal_matchings(h)) CHECK(m.size() == want);
        // and the matching complex is pure of that dimension
        SimplicialComplex cx = matching_complex(h);
        CHECK(is_pure(cx));
        CHECK(cx.dim() + 1 == static_cast<int>(want));
    }
}

TEST_CASE("purity of the structured families") {
    for (std::uint32_t k = 1; k <= 5; ++k) CHECK(is_pure(matching_complex(star_graph(k))));
    for (std::uint32_t t = 1; t <= 4; ++t) CHECK(is_pure(matching_complex(star_triangle(t))));
}

TEST_CASE("canonical keys merge relabelings") {
    SimplicialComplex a = make_complex(6, {face({1, 4}), face({4, 5})});
    SimplicialComplex b = make_complex(3, {face({0, 1}), face({1, 2})});
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(canonical_key(a) != canonical_key(make_complex(3, {face({0, 1}), face({1, 2}), face({0, 2})})));
}
