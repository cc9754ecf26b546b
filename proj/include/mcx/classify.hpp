#ifndef MCX_CLASSIFY_HPP
#define MCX_CLASSIFY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcx/decide.hpp"
#include "mcx/field.hpp"
#include "mcx/graph.hpp"

namespace mcx {

// Witness structure for a Cameron-Walker graph: a connected bipartite base
// on (X, Y), at least one leaf edge per X-vertex, pendant triangles at
// Y-vertices.  Reassembling the parts reproduces the input graph exactly.
struct CWDecomposition {
    std::vector<std::uint32_t> x, y;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> base_edges;
    std::map<std::uint32_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> leaf_edges;
    std::map<std::uint32_t, std::vector<std::array<std::uint32_t, 3>>> pendant_triangles;

    std::uint32_t triangle_count() const {
        std::uint32_t t = 0;
        for (const auto& [y_vertex, tris] : pendant_triangles)
            t += static_cast<std::uint32_t>(tris.size());
        return t;
    }
};

// K_2 counts as a star with one leaf; a single vertex as a star with none.
bool is_star(const Graph& h);

// Triangles joined at one common vertex; a single triangle qualifies.
bool is_star_triangle(const Graph& h);

// Structural recognition by peeling pendant triangles (triangles with two
// degree-2 vertices) and classifying leaves; returns nullopt when the graph
// is a star, a star triangle, or fails the structure.
std::optional<CWDecomposition> cameron_walker_decompose(const Graph& h);

// Equality of maximum induced matching and maximum matching sizes, computed
// from the search-based graph operations (the structural classification is
// tested against it, not assumed).
bool has_im_eq_m(const Graph& h);

// True iff every connected component is a single vertex, a single edge, a
// path with two edges, a 5-cycle, or K_{2,3}.  Isolated-vertex components
// are permitted and flagged through gorenstein_classifier_report.
bool gorenstein_classifier(const Graph& h);

struct GorensteinClassification {
    bool verdict;
    bool has_isolated_vertices;
    std::vector<std::string> component_kinds;  // per component, or "other"
};
GorensteinClassification gorenstein_classifier_report(const Graph& h);

// For connected h with girth(h) >= 5: Cohen-Macaulayness of the matching
// complex is equivalent to h being a 5-cycle, a star, or Cameron-Walker.
bool girth5_cm_classifier(const Graph& h);

struct KnPredicates {
    bool strongly_connected;
    bool cm;
};
KnPredicates kn_predicates(std::uint32_t n);

struct KmnPredicates {
    bool strongly_connected;
    Tri cm;  // Indeterminate encodes "unknown" for m >= 5
};
KmnPredicates kmn_predicates(std::uint32_t m, std::uint32_t n);

// Criterion evaluated against matching complexes of K_{m,n}.
struct AmCriterion {
    enum class Kind { vertex_decomposable, shellable, cohen_macaulay } kind;
    FieldSpec field = FieldSpec::rationals();  // used by cohen_macaulay

    static AmCriterion vd() { return {Kind::vertex_decomposable, FieldSpec::rationals()}; }
    static AmCriterion shellable() { return {Kind::shellable, FieldSpec::rationals()}; }
    static AmCriterion cm(FieldSpec f) { return {Kind::cohen_macaulay, f}; }
};

struct AmSearchResult {
    std::optional<std::uint32_t> found;  // smallest n in (m, n_max] passing
    bool indeterminate = false;          // a budgeted check gave no verdict
};

// Scans n = m+1 .. n_max; decision results are shared through the cache.
AmSearchResult a_m_search(std::uint32_t m, const AmCriterion& criterion, std::uint32_t n_max,
                          DecisionCache* cache = nullptr,
                          std::uint64_t budget = kUnlimitedBudget);

// Per-predicate results for a CLI classification report.
struct ClassReport {
    bool connected;
    std::optional<bool> star, star_triangle, cameron_walker, im_eq_m;
    std::optional<CWDecomposition> decomposition;
    bool gorenstein_graph;
    std::optional<bool> girth5_cm;  // set only when connected with girth >= 5
    std::vector<std::string> notes;
};
ClassReport classify_graph(const Graph& h);

} // namespace mcx

#endif // MCX_CLASSIFY_HPP
