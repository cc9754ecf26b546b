#include "mcx/repro.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "mcx/classify.hpp"
#include "mcx/complex.hpp"
#include "mcx/enumerate.hpp"
#include "mcx/graph_io.hpp"
#include "mcx/homology.hpp"

namespace mcx {

namespace {

constexpr std::uint64_t kShellBudget = 50'000'000;  // runs expected to succeed
constexpr std::uint64_t kShellProbeBudget = 200'000;

Claim expect(std::string name, bool pass, std::string detail = "") {
    return Claim{std::move(name), pass, std::move(detail)};
}

Claim expect_eq_i64(std::string name, std::int64_t got, std::int64_t want) {
    bool ok = got == want;
    std::ostringstream detail;
    detail << "expected " << want << ", got " << got;
    return Claim{std::move(name), ok, detail.str()};
}

std::string graph_tag(const Graph& g) {
    return "n" + std::to_string(g.n) + "/" + serialize_graph6(g);
}

const std::vector<std::uint32_t>& primes_upto_50() {
    static const std::vector<std::uint32_t> ps{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    return ps;
}

// --- criterion 1: K7 Betti regression -----------------------------------

SuiteResult criterion_k7_betti(DecisionCache& cache) {
    SuiteResult out{criterion_title(1), {}};
    SimplicialComplex m7 = matching_complex(complete_graph(7));
    BettiTable gf3 = reduced_betti_cached(m7, FieldSpec::gf(3), &cache);
    BettiTable q = reduced_betti_cached(m7, FieldSpec::rationals(), &cache);
    out.claims.push_back(expect_eq_i64("betti_1(M(K7); GF(3)) = 1", gf3.at(1), 1));
    out.claims.push_back(expect_eq_i64("betti_0(M(K7); GF(3)) = 0", gf3.at(0), 0));
    out.claims.push_back(expect_eq_i64("betti_0(M(K7); Q) = 0", q.at(0), 0));
    out.claims.push_back(expect_eq_i64("betti_1(M(K7); Q) = 0", q.at(1), 0));
    return out;
}

// --- criterion 2: K7 prime scan ------------------------------------------

SuiteResult criterion_k7_prime_scan(DecisionCache& cache) {
    SuiteResult out{criterion_title(2), {}};
    SimplicialComplex m7 = matching_complex(complete_graph(7));
    for (std::uint32_t p : primes_upto_50()) {
        BettiTable b = reduced_betti_cached(m7, FieldSpec::gf(p), &cache);
        std::int64_t want = p == 3 ? 1 : 0;
        out.claims.push_back(
            expect_eq_i64("betti_1(M(K7); GF(" + std::to_string(p) + "))", b.at(1), want));
    }
    return out;
}

// --- criterion 3: K9 over Q ------------------------------------------------

SuiteResult criterion_k9_rational(DecisionCache& cache) {
    SuiteResult out{criterion_title(3), {}};
    SimplicialComplex m9 = matching_complex(complete_graph(9));
    BettiTable q = reduced_betti_cached(m9, FieldSpec::rationals(), &cache);
    out.claims.push_back(expect("betti_2(M(K9); Q) != 0", q.at(2) != 0,
                                "betti_2 = " + std::to_string(q.at(2))));
    return out;
}

// --- criterion 4: K_n table -------------------------------------------------

SuiteResult criterion_kn_table(DecisionCache& cache) {
    SuiteResult out{criterion_title(4), {}};
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3)};
    for (std::uint32_t n = 2; n <= 9; ++n) {
        SimplicialComplex cx = matching_complex(complete_graph(n));
        bool sc = is_strongly_connected(cx);
        bool sc_want = kn_predicates(n).strongly_connected;
        out.claims.push_back(expect("sc(M(K" + std::to_string(n) + ")) matches closed form",
                                    sc == sc_want,
                                    std::string("observed ") + (sc ? "true" : "false")));
        bool cm_all = true;
        std::string observed;
        for (const FieldSpec& f : fields) {
            bool cm = is_cohen_macaulay(cx, f, &cache);
            cm_all = cm_all && cm;
            observed += f.to_string() + (cm ? "+" : "-") + " ";
        }
        bool want = kn_predicates(n).cm;
        out.claims.push_back(expect("cm(M(K" + std::to_string(n) + ")) over {q,gf2,gf3}",
                                    cm_all == want, observed));
    }
    out.claims.push_back(expect(
        "the rational exception: M(K7) is CM over Q",
        is_cohen_macaulay(matching_complex(complete_graph(7)), FieldSpec::rationals(), &cache)));
    return out;
}

// --- criterion 5: K_{m,n} thresholds ---------------------------------------

SuiteResult criterion_kmn_thresholds(DecisionCache& cache) {
    SuiteResult out{criterion_title(5), {}};
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3)};

    for (auto [m, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 5}, {4, 7}}) {
        SimplicialComplex cx = matching_complex(complete_bipartite(m, n));
        VdResult vd = is_vertex_decomposable(cx, &cache);
        out.claims.push_back(expect(
            "M(K_{" + std::to_string(m) + "," + std::to_string(n) + "}) vertex decomposable",
            vd.value == Tri::True, std::string("verdict ") + to_string(vd.value)));
    }

    for (auto [m, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {2, 2}, {3, 3}, {3, 4}, {4, 4}, {4, 5}, {4, 6}}) {
        SimplicialComplex cx = matching_complex(complete_bipartite(m, n));
        bool cm = is_cohen_macaulay(cx, FieldSpec::rationals(), &cache);
        out.claims.push_back(expect("M(K_{" + std::to_string(m) + "," + std::to_string(n) +
                                        "}) not CM over Q",
                                    !cm));
    }

    for (auto [m, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}, {3, 7}}) {
        std::string tag = "M(K_{" + std::to_string(m) + "," + std::to_string(n) + "})";
        SimplicialComplex cx = matching_complex(complete_bipartite(m, n));
        bool cm_all = true;
        for (const FieldSpec& f : fields) cm_all = cm_all && is_cohen_macaulay(cx, f, &cache);
        out.claims.push_back(expect(tag + " CM over {q,gf2,gf3}", cm_all));
        ShellResult sh = is_shellable(cx, kShellBudget);
        out.claims.push_back(
            expect(tag + " shellable", sh.value == Tri::True, std::string(to_string(sh.value))));
        VdResult vd = is_vertex_decomposable(cx, &cache);
        out.claims.push_back(
            expect(tag + " vertex decomposable", vd.value == Tri::True));
    }

    // strong connectivity of M(K_{m,n}) matches the closed form
    for (std::uint32_t m = 2; m <= 6; ++m)
        for (std::uint32_t n = m; n <= 6; ++n) {
            SimplicialComplex cx = matching_complex(complete_bipartite(m, n));
            bool sc = is_strongly_connected(cx);
            bool want = kmn_predicates(m, n).strongly_connected;
            out.claims.push_back(expect("sc(M(K_{" + std::to_string(m) + "," + std::to_string(n) +
                                            "})) matches closed form",
                                        sc == want));
        }
    return out;
}

// --- criterion 6: Gorenstein oracle equivalence -----------------------------

SuiteResult criterion_gorenstein_oracle(DecisionCache& cache) {
    SuiteResult out{criterion_title(6), {}};
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3)};
    std::uint32_t checked = 0, mismatches = 0;
    std::string first_bad;
    for (std::uint32_t n = 2; n <= 6; ++n) {
        for (const Graph& h : connected_graphs_upto_iso(n)) {
            if (h.edge_count() == 0) continue;
            bool classifier = gorenstein_classifier(h);
            SimplicialComplex cx = matching_complex(h);
            for (const FieldSpec& f : fields) {
                ++checked;
                bool oracle = is_gorenstein(cx, f, &cache);
                if (oracle != classifier) {
                    ++mismatches;
                    if (first_bad.empty())
                        first_bad = graph_tag(h) + " over " + f.to_string() + ": classifier " +
                                    (classifier ? "true" : "false");
                }
            }
        }
    }
    out.claims.push_back(expect(
        "classifier == core-criterion oracle on all connected graphs with <= 6 vertices",
        mismatches == 0,
        mismatches == 0 ? std::to_string(checked) + " comparisons" : first_bad));
    return out;
}

// --- criterion 7: girth >= 5 corollary ---------------------------------------

SuiteResult criterion_girth5(DecisionCache& cache) {
    SuiteResult out{criterion_title(7), {}};
    std::uint32_t checked = 0, mismatches = 0;
    std::string first_bad;
    for (std::uint32_t n = 1; n <= 8; ++n) {
        for (const Graph& h : connected_girth5_graphs_upto_iso(n)) {
            SimplicialComplex cx = matching_complex(h);
            bool pure = is_pure(cx);
            bool vd = pure && is_vertex_decomposable(cx, &cache).value == Tri::True;
            bool shellable = false;
            if (pure) {
                ShellResult sh = is_shellable(cx, kShellBudget);
                if (sh.value == Tri::Indeterminate) {
                    out.claims.push_back(
                        expect("shellability search exhausted on " + graph_tag(h), false));
                    continue;
                }
                shellable = sh.value == Tri::True;
            }
            bool cm = is_cohen_macaulay(cx, FieldSpec::rationals(), &cache);
            bool classifier = girth5_cm_classifier(h);
            ++checked;
            if (vd != shellable || shellable != cm || cm != classifier) {
                ++mismatches;
                if (first_bad.empty()) {
                    std::ostringstream s;
                    s << graph_tag(h) << " vd=" << vd << " shellable=" << shellable
                      << " cm=" << cm << " classifier=" << classifier;
                    first_bad = s.str();
                }
            }
        }
    }
    out.claims.push_back(expect(
        "pure+vd == pure+shellable == CM(Q) == classifier on girth >= 5, <= 8 vertices",
        mismatches == 0, mismatches == 0 ? std::to_string(checked) + " graphs" : first_bad));
    return out;
}

// --- criterion 8: im = m suite -----------------------------------------------

SuiteResult criterion_im_eq_m(DecisionCache& cache) {
    SuiteResult out{criterion_title(8), {}};
    std::uint32_t checked = 0, class_bad = 0, pure_bad = 0, vd_bad = 0, size_bad = 0;
    std::string first_bad;
    for (std::uint32_t n = 1; n <= 7; ++n) {
        for (const Graph& h : connected_graphs_upto_iso(n)) {
            ++checked;
            bool im_eq = has_im_eq_m(h);
            bool star = is_star(h);
            bool tri = is_star_triangle(h);
            auto cw = cameron_walker_decompose(h);
            bool structural = star || tri || cw.has_value();
            if (im_eq != structural) {
                ++class_bad;
                if (first_bad.empty())
                    first_bad = graph_tag(h) + " im_eq=" + std::to_string(im_eq) +
                                " structural=" + std::to_string(structural);
                continue;
            }
            if (!im_eq) continue;
            SimplicialComplex cx = matching_complex(h);
            if (!is_pure(cx)) {
                ++pure_bad;
                if (first_bad.empty()) first_bad = graph_tag(h) + " impure";
            }
            if (is_vertex_decomposable(cx, &cache).value != Tri::True) {
                ++vd_bad;
                if (first_bad.empty()) first_bad = graph_tag(h) + " not vd";
            }
            if (cw) {
                std::uint32_t want = static_cast<std::uint32_t>(cw->x.size()) + cw->triangle_count();
                for (const VSet& f : cx.facets)
                    if (f.count() != want) {
                        ++size_bad;
                        if (first_bad.empty())
                            first_bad = graph_tag(h) + " facet size " +
                                        std::to_string(f.count()) + " != |X|+t = " +
                                        std::to_string(want);
                        break;
                    }
            }
        }
    }
    bool ok = class_bad + pure_bad + vd_bad + size_bad == 0;
    out.claims.push_back(expect(
        "im=m <=> star | star-triangle | Cameron-Walker; then pure, vd, |facet| = |X|+t",
        ok, ok ? std::to_string(checked) + " graphs" : first_bad));
    return out;
}

// --- criterion 9: perfect-matching remark -------------------------------------

SuiteResult criterion_perfect_matching(DecisionCache&) {
    SuiteResult out{criterion_title(9), {}};
    std::uint32_t applicable = 0, violations = 0;
    std::string first_bad;
    for (std::uint32_t n = 2; n <= 6; ++n) {
        for (const Graph& h : all_graphs_upto_iso(n)) {
            if (h.edge_count() == 0 || !has_perfect_matching(h)) continue;
            SimplicialComplex cx = matching_complex(h);
            if (cx.facets.size() < 2) continue;
            ++applicable;
            if (is_strongly_connected(cx)) {
                ++violations;
                if (first_bad.empty()) first_bad = graph_tag(h);
            }
        }
    }
    out.claims.push_back(expect(
        "perfect matching and >= 2 maximal matchings forbid strong connectivity",
        violations == 0,
        violations == 0 ? std::to_string(applicable) + " graphs" : first_bad));
    return out;
}

// --- criterion 10: figure regressions ------------------------------------------

SuiteResult criterion_figures(DecisionCache&) {
    SuiteResult out{criterion_title(10), {}};
    Graph fig2 = *builtin_graph("paper-fig2-rightmost");
    Polynomial ip = independence_polynomial(line_graph(fig2).first);
    Polynomial want{{BigInt{1}, BigInt{12}, BigInt{36}, BigInt{24}}};
    out.claims.push_back(expect("independence polynomial of L(paper-fig2-rightmost)",
                                ip == want, ip.to_string()));
    EulerSign sign = euler_sign_test(line_graph(fig2).first);
    out.claims.push_back(expect("euler sign test fails on L(paper-fig2-rightmost)",
                                sign == EulerSign::Fails, to_string(sign)));

    Graph fig3 = *builtin_graph("paper-fig3");
    auto cw = cameron_walker_decompose(fig3);
    out.claims.push_back(expect("paper-fig3 decomposes as a Cameron-Walker graph", cw.has_value()));
    if (cw) {
        out.claims.push_back(expect_eq_i64("paper-fig3 |X|", static_cast<std::int64_t>(cw->x.size()), 2));
        out.claims.push_back(
            expect_eq_i64("paper-fig3 pendant triangles", cw->triangle_count(), 3));
        // reassembly: base + leaf edges + triangles reproduce the input
        std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = cw->base_edges;
        for (const auto& [x, le] : cw->leaf_edges)
            for (auto e : le) edges.push_back(e);
        for (const auto& [y, ts] : cw->pendant_triangles)
            for (const auto& t : ts) {
                edges.emplace_back(t[0], t[1]);
                edges.emplace_back(t[0], t[2]);
                edges.emplace_back(t[1], t[2]);
            }
        out.claims.push_back(
            expect("paper-fig3 decomposition reassembles the graph", make_graph(fig3.n, edges) == fig3));
    }
    return out;
}

// --- criterion 11: property suites ----------------------------------------------

SimplicialComplex random_complex(std::mt19937& rng) {
    std::uint32_t ground = 1 + rng() % 12;
    std::uint32_t nfaces = 1 + rng() % 8;
    std::vector<VSet> faces;
    for (std::uint32_t i = 0; i < nfaces; ++i) {
        VSet f;
        std::uint32_t size = rng() % std::min(ground + 1, 6u);
        for (std::uint32_t k = 0; k < size; ++k) f.set(rng() % ground);
        faces.push_back(f);
    }
    return make_complex(ground, std::move(faces));
}

SuiteResult criterion_properties(DecisionCache& cache) {
    SuiteResult out{criterion_title(11), {}};
    const std::vector<FieldSpec> fields{FieldSpec::rationals(), FieldSpec::gf(2), FieldSpec::gf(3)};

    // boundary composition vanishes on random complexes
    {
        std::mt19937 rng(20240811);
        std::uint32_t bad = 0;
        for (int i = 0; i < 200; ++i) {
            SimplicialComplex cx = random_complex(rng);
            auto groups = faces_by_size(cx);
            for (int d = 0; d <= cx.dim(); ++d)
                if (!boundary_squares_to_zero(boundary_matrix(groups, d),
                                              boundary_matrix(groups, d + 1)))
                    ++bad;
        }
        out.claims.push_back(expect("boundary . boundary = 0 on 200 random complexes", bad == 0));
    }

    // Euler consistency and the implication chain over matching complexes of
    // all graphs with <= 7 vertices
    std::uint32_t euler_bad = 0, chain_bad = 0, shed_bad = 0, probes = 0;
    std::string first_bad;
    for (std::uint32_t n = 1; n <= 7; ++n) {
        for (const Graph& h : all_graphs_upto_iso(n)) {
            SimplicialComplex cx = matching_complex(h);
            auto fv = f_vector(cx);
            bool pure = is_pure(cx);
            bool sc = is_strongly_connected(cx);
            bool cm_all = true, cm_any = false;
            for (const FieldSpec& f : fields) {
                BettiTable b = reduced_betti_cached(cx, f, &cache);
                if (euler_characteristic_reduced(b) != euler_characteristic_reduced(fv)) {
                    ++euler_bad;
                    if (first_bad.empty()) first_bad = "euler " + graph_tag(h);
                }
                bool cm = is_cohen_macaulay(cx, f, &cache);
                cm_all = cm_all && cm;
                cm_any = cm_any || cm;
            }
            if (cm_any && !(pure && sc)) {
                ++chain_bad;
                if (first_bad.empty()) first_bad = "cm without pure+sc " + graph_tag(h);
            }
            bool vd = is_vertex_decomposable(cx, &cache).value == Tri::True;
            if (vd && pure) {
                ShellResult sh = is_shellable(cx, kShellBudget);
                if (sh.value != Tri::True || !cm_all) {
                    ++chain_bad;
                    if (first_bad.empty()) first_bad = "vd chain " + graph_tag(h);
                }
            } else if (pure && !vd) {
                // opportunistic probe: a shellable complex must be CM
                ShellResult sh = is_shellable(cx, kShellProbeBudget);
                ++probes;
                if (sh.value == Tri::True && !cm_all) {
                    ++chain_bad;
                    if (first_bad.empty()) first_bad = "shellable without cm " + graph_tag(h);
                }
            }
        }
    }
    out.claims.push_back(expect("euler consistency on matching complexes, <= 7 vertices",
                                euler_bad == 0, euler_bad == 0 ? "" : first_bad));
    out.claims.push_back(expect(
        "vd => shellable => cm => pure & strongly connected", chain_bad == 0,
        chain_bad == 0 ? std::to_string(probes) + " bounded shellability probes" : first_bad));

    // shedding proposition on the connected <= 7 corpus
    for (std::uint32_t n = 2; n <= 7; ++n) {
        for (const Graph& h : connected_graphs_upto_iso(n)) {
            SimplicialComplex cx = matching_complex(h);
            if (!is_pure(cx) || cx.facets.front().empty()) continue;
            VSet used = cx.used_vertices();
            used.for_each([&](std::uint32_t v) {
                if (!is_shedding_vertex(cx, v)) return;
                SimplicialComplex lk = link(cx, VSet::singleton(v));
                SimplicialComplex del = delete_vertex(cx, v);
                for (const FieldSpec& f : fields) {
                    if (!is_cohen_macaulay(lk, f, &cache)) continue;
                    if (!is_cohen_macaulay(del, f, &cache)) continue;
                    if (!is_cohen_macaulay(cx, f, &cache)) {
                        ++shed_bad;
                        if (first_bad.empty()) first_bad = "shedding " + graph_tag(h);
                    }
                }
            });
        }
    }
    out.claims.push_back(
        expect("shedding vertex with CM link and deletion forces CM", shed_bad == 0,
               shed_bad == 0 ? "" : first_bad));
    return out;
}

} // namespace

int criterion_count() { return 11; }

std::string criterion_title(int number) {
    switch (number) {
        case 1: return "Betti regression for M(K7)";
        case 2: return "prime scan for M(K7)";
        case 3: return "M(K9) rational homology";
        case 4: return "K_n strong connectivity and CM table, n = 2..9";
        case 5: return "K_{m,n} vertex decomposability and CM thresholds";
        case 6: return "Gorenstein classifier against the core-criterion oracle";
        case 7: return "girth >= 5 four-way equivalence";
        case 8: return "im = m classification and vertex decomposability";
        case 9: return "perfect matchings forbid strong connectivity";
        case 10: return "pinned figure graphs";
        case 11: return "property suites";
        default: return "unknown criterion";
    }
}

SuiteResult run_criterion(int number, DecisionCache& cache) {
    switch (number) {
        case 1: return criterion_k7_betti(cache);
        case 2: return criterion_k7_prime_scan(cache);
        case 3: return criterion_k9_rational(cache);
        case 4: return criterion_kn_table(cache);
        case 5: return criterion_kmn_thresholds(cache);
        case 6: return criterion_gorenstein_oracle(cache);
        case 7: return criterion_girth5(cache);
        case 8: return criterion_im_eq_m(cache);
        case 9: return criterion_perfect_matching(cache);
        case 10: return criterion_figures(cache);
        case 11: return criterion_properties(cache);
        default: throw invalid_input("run_criterion: unknown criterion number");
    }
}

std::vector<std::string> suite_names() {
    return {"gorenstein_small", "girth5", "kn", "kmn", "k7_primes", "euler_sign"};
}

std::vector<int> suite_criteria(const std::string& name) {
    if (name == "gorenstein_small") return {6};
    if (name == "girth5") return {7};
    if (name == "kn") return {4};
    if (name == "kmn") return {5};
    if (name == "k7_primes") return {1, 2};
    if (name == "euler_sign") return {10};
    throw invalid_input("unknown reproduction suite '" + name + "'");
}

} // namespace mcx
