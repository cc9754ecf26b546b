#ifndef MCX_COMPLEX_HPP
#define MCX_COMPLEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mcx/bitset.hpp"
#include "mcx/graph.hpp"

namespace mcx {

// Facet-presented simplicial complex on ground vertices 0..ground-1.
// Facets form an antichain sorted by face_less.  The empty complex is the
// single facet {}; the void complex (no faces at all) is rejected at
// construction.  Ground vertices outside every facet are permitted (they
// arise from deletions) and are ignored by purity and connectivity.
struct SimplicialComplex {
    std::uint32_t ground = 0;
    std::vector<VSet> facets;

    // dim = -1 for the empty complex {}.
    int dim() const;
    bool is_simplex() const { return facets.size() == 1; }
    VSet used_vertices() const;
    bool has_face(const VSet& f) const;
    bool operator==(const SimplicialComplex& o) const {
        return ground == o.ground && facets == o.facets;
    }
};

// Normalizes an arbitrary generating family to its maximal antichain.
SimplicialComplex make_complex(std::uint32_t ground, std::vector<VSet> faces);

// The (-1)-dimensional complex {}.
SimplicialComplex empty_complex(std::uint32_t ground = 0);

SimplicialComplex independence_complex(const Graph& g);

// Faces are the matchings of h; vertices are the edge labels of h in
// lexicographic endpoint order (the line-graph identification).
SimplicialComplex matching_complex(const Graph& h);

SimplicialComplex link(const SimplicialComplex& c, const VSet& face);
SimplicialComplex delete_vertex(const SimplicialComplex& c, std::uint32_t v);
SimplicialComplex star(const SimplicialComplex& c, std::uint32_t v);

// Restriction to vertices that miss at least one facet (cone points removed).
SimplicialComplex core(const SimplicialComplex& c);

bool is_pure(const SimplicialComplex& c);

// f_vector[k] = number of faces of cardinality k; f_vector[0] = 1.
std::vector<std::uint64_t> f_vector(const SimplicialComplex& c);

// All faces grouped by cardinality, each group sorted by face_less.
// group[k] holds the faces of size k; group[0] = { {} }.
std::vector<std::vector<VSet>> faces_by_size(const SimplicialComplex& c);

// Facet graph connectivity: facets adjacent when they share all but one
// vertex.  False with a diagnostic for non-pure complexes.
bool is_strongly_connected(const SimplicialComplex& c, std::string* diagnostic = nullptr);

// True when no facet of link(v) is a facet of the deletion c - v.
bool is_shedding_vertex(const SimplicialComplex& c, std::uint32_t v);

// Memo key: facets with used vertices relabeled by first occurrence in
// facet order, re-sorted and serialized.  Identical keys guarantee equal
// complexes up to that relabeling.
std::string canonical_key(const SimplicialComplex& c);

// Key plus the relabeling, for translating cached per-vertex data between
// complexes that share a key.
struct CanonicalForm {
    std::string key;
    std::vector<std::uint32_t> to_canonical;    // ground vertex -> canonical id
    std::vector<std::uint32_t> from_canonical;  // canonical id -> ground vertex
};
CanonicalForm canonical_form(const SimplicialComplex& c);

} // namespace mcx

#endif // MCX_COMPLEX_HPP
