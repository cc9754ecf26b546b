#include <doctest.h>

#include "mcx/classify.hpp"
#include "mcx/complex.hpp"
#include "mcx/enumerate.hpp"
#include "mcx/graph_io.hpp"

using namespace mcx;

TEST_CASE("star and star-triangle recognition") {
    CHECK(is_star(star_graph(4)));
    CHECK(is_star(path_graph(1)));  // K_2 counts as a star
    CHECK(is_star(make_graph(1, {})));
    CHECK(!is_star(cycle_graph(5)));
    CHECK(!is_star(star_triangle(2)));

    CHECK(is_star_triangle(star_triangle(3)));
    CHECK(is_star_triangle(complete_graph(3)));
    CHECK(!is_star_triangle(cycle_graph(5)));
    CHECK(!is_star_triangle(star_graph(4)));

    CHECK_THROWS_AS(is_star(disjoint_union(path_graph(1), path_graph(1))), invalid_input);
}

TEST_CASE("cameron-walker recognition on the pinned example") {
    Graph fig3 = *builtin_graph("paper-fig3");
    auto d = cameron_walker_decompose(fig3);
    REQUIRE(d.has_value());
    CHECK(d->x.size() == 2);
    CHECK(d->y.size() == 2);
    CHECK(d->triangle_count() == 3);
    std::uint32_t leaf_count = 0;
    for (const auto& [x, le] : d->leaf_edges) leaf_count += le.size();
    CHECK(leaf_count == 3);

    CHECK(!cameron_walker_decompose(star_graph(3)).has_value());
    CHECK(!cameron_walker_decompose(cycle_graph(5)).has_value());
    CHECK_THROWS_AS(cameron_walker_decompose(disjoint_union(path_graph(2), path_graph(2))),
                    invalid_input);
}

TEST_CASE("decomposition reassembles the input exactly") {
    for (std::uint32_t n = 2; n <= 7; ++n)
        for (const Graph& h : connected_graphs_upto_iso(n)) {
            auto d = cameron_walker_decompose(h);
            if (!d) continue;
            std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = d->base_edges;
            for (const auto& [x, le] : d->leaf_edges)
                for (auto e : le) edges.push_back(e);
            for (const auto& [y, ts] : d->pendant_triangles)
                for (const auto& t : ts) {
                    edges.emplace_back(t[0], t[1]);
                    edges.emplace_back(t[0], t[2]);
                    edges.emplace_back(t[1], t[2]);
                }
            CHECK(make_graph(h.n, edges) == h);
            // every X vertex keeps at least one leaf edge
            for (std::uint32_t x : d->x) CHECK(d->leaf_edges.count(x) == 1);
        }
}

TEST_CASE("im = m from search matches the examples") {
    CHECK(has_im_eq_m(star_triangle(2)));
    CHECK(!has_im_eq_m(cycle_graph(5)));
    CWParams params;
    params.base = make_graph(2, {{0, 1}});
    params.part_x = {0};
    params.leaf_mult[0] = 2;
    params.triangle_mult[1] = 1;
    CHECK(has_im_eq_m(cameron_walker_graph(params)));
}

TEST_CASE("gorenstein classifier") {
    CHECK(gorenstein_classifier(disjoint_union(path_graph(2), cycle_graph(5))));
    CHECK(!gorenstein_classifier(complete_graph(4)));
    CHECK(gorenstein_classifier(complete_bipartite(2, 3)));
    CHECK(gorenstein_classifier(path_graph(1)));
    // isolated vertices are permitted and flagged
    GorensteinClassification g =
        gorenstein_classifier_report(disjoint_union(make_graph(1, {}), cycle_graph(5)));
    CHECK(g.verdict);
    CHECK(g.has_isolated_vertices);
    // a 7-cycle component fails
    CHECK(!gorenstein_classifier(cycle_graph(7)));
}

TEST_CASE("girth5 classifier") {
    CHECK(girth5_cm_classifier(cycle_graph(5)));
    CHECK(!girth5_cm_classifier(cycle_graph(7)));
    CHECK(girth5_cm_classifier(star_graph(5)));
    // a genuine girth >= 5 Cameron-Walker instance: base path with leaves at
    // both ends of the X part
    CWParams params;
    params.base = make_graph(3, {{0, 2}, {1, 2}});
    params.part_x = {0, 1};
    params.leaf_mult[0] = 1;
    params.leaf_mult[1] = 2;
    Graph cw = cameron_walker_graph(params);
    CHECK(girth(cw) == std::nullopt);  // a tree
    CHECK(cameron_walker_decompose(cw).has_value());
    CHECK(girth5_cm_classifier(cw));
    CHECK_THROWS_AS(girth5_cm_classifier(complete_graph(3)), invalid_input);
    CHECK_THROWS_AS(girth5_cm_classifier(complete_bipartite(2, 2)), invalid_input);
}

TEST_CASE("closed-form predicates") {
    KnPredicates k7 = kn_predicates(7);
    CHECK(k7.strongly_connected);
    CHECK(!k7.cm);
    CHECK(kn_predicates(2).strongly_connected);
    CHECK(kn_predicates(2).cm);
    CHECK(!kn_predicates(4).strongly_connected);
    CHECK(kn_predicates(5).cm);
    CHECK_THROWS_AS(kn_predicates(1), invalid_input);

    KmnPredicates k35 = kmn_predicates(3, 5);
    CHECK(k35.strongly_connected);
    CHECK(k35.cm == Tri::True);
    KmnPredicates k59 = kmn_predicates(5, 9);
    CHECK(k59.strongly_connected);
    CHECK(k59.cm == Tri::Indeterminate);  // open beyond m = 4
    CHECK(kmn_predicates(2, 2).cm == Tri::False);
    CHECK(!kmn_predicates(3, 3).strongly_connected);
    CHECK(kmn_predicates(1, 4).strongly_connected);
    CHECK_THROWS_AS(kmn_predicates(3, 2), invalid_input);
}

TEST_CASE("a_m search") {
    DecisionCache cache;
    AmSearchResult a2 = a_m_search(2, AmCriterion::vd(), 8, &cache);
    CHECK(a2.found == 3);
    AmSearchResult a3 = a_m_search(3, AmCriterion::vd(), 8, &cache);
    CHECK(a3.found == 5);
    AmSearchResult a1 = a_m_search(1, AmCriterion::cm(FieldSpec::rationals()), 8, &cache);
    CHECK(a1.found == 2);

    // strictly increasing over the computed range, for each criterion
    std::vector<std::uint32_t> vd_values;
    for (std::uint32_t m = 1; m <= 3; ++m) {
        auto r = a_m_search(m, AmCriterion::vd(), 8, &cache);
        REQUIRE(r.found.has_value());
        vd_values.push_back(*r.found);
    }
    for (std::size_t i = 1; i < vd_values.size(); ++i) CHECK(vd_values[i - 1] < vd_values[i]);

    // and the criterion keeps holding beyond the threshold (tested bound 2m+2)
    for (std::uint32_t m = 1; m <= 3; ++m)
        for (std::uint32_t n = 2 * m - 1; n <= 2 * m + 2; ++n) {
            SimplicialComplex cx = matching_complex(complete_bipartite(m, n));
            CHECK(is_vertex_decomposable(cx, &cache).value == Tri::True);
        }

    // an exhausted budget propagates as indeterminate
    AmSearchResult starved = a_m_search(3, AmCriterion::shellable(), 6, nullptr, 2);
    CHECK(starved.indeterminate);
    CHECK(!starved.found.has_value());
}

TEST_CASE("classification report") {
    ClassReport r = classify_graph(path_graph(1));
    CHECK(r.connected);
    CHECK(r.star == true);
    bool has_k2_note = false;
    for (const std::string& n : r.notes)
        if (n.find("K_2") != std::string::npos) has_k2_note = true;
    CHECK(has_k2_note);

    ClassReport r2 = classify_graph(disjoint_union(cycle_graph(5), cycle_graph(5)));
    CHECK(!r2.connected);
    CHECK(r2.gorenstein_graph);
    CHECK(!r2.star.has_value());
}

TEST_CASE("oracle equivalence at small scale") {
    DecisionCache cache;
    // classifier versus the core-criterion oracle, over Q, on <= 5 vertices
    for (std::uint32_t n = 2; n <= 5; ++n)
        for (const Graph& h : connected_graphs_upto_iso(n)) {
            if (h.edge_count() == 0) continue;
            bool classifier = gorenstein_classifier(h);
            bool oracle = is_gorenstein(matching_complex(h), FieldSpec::rationals(), &cache);
            CHECK(classifier == oracle);
        }
    // im = m structural equivalence and vertex decomposability on <= 5 vertices
    for (std::uint32_t n = 1; n <= 5; ++n)
        for (const Graph& h : connected_graphs_upto_iso(n)) {
            bool im_eq = has_im_eq_m(h);
            bool structural =
                is_star(h) || is_star_triangle(h) || cameron_walker_decompose(h).has_value();
            CHECK(im_eq == structural);
            if (im_eq)
                CHECK(is_vertex_decomposable(matching_complex(h), &cache).value == Tri::True);
        }
}
