#include "mcx/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "mcx/error.hpp"

namespace mcx {

int SimplicialComplex::dim() const {
    std::uint32_t best = 0;
    for (const VSet& f : facets) best = std::max(best, f.count());
    return static_cast<int>(best) - 1;
}

VSet SimplicialComplex::used_vertices() const {
    VSet u;
    for (const VSet& f : facets) u |= f;
    return u;
}

bool SimplicialComplex::has_face(const VSet& f) const {
    for (const VSet& g : facets)
        if (f.is_subset_of(g)) return true;
    return false;
}

SimplicialComplex make_complex(std::uint32_t ground, std::vector<VSet> faces) {
    if (ground > VSet::kCapacity)
        throw invalid_input("make_complex: at most " + std::to_string(VSet::kCapacity) +
                            " ground vertices are supported");
    if (faces.empty())
        throw invalid_input("make_complex: the void complex is not representable");
    for (const VSet& f : faces) {
        VSet oob = f.minus(VSet::first_n(ground));
        if (oob.any()) throw invalid_input("make_complex: face vertex outside ground set");
    }
    // keep maximal faces only
    std::sort(faces.begin(), faces.end(),
              [](const VSet& a, const VSet& b) { return a.count() > b.count(); });
    std::vector<VSet> maximal;
    for (const VSet& f : faces) {
        bool contained = false;
        for (const VSet& g : maximal)
            if (f.is_subset_of(g)) {
                contained = true;
                break;
            }
        if (!contained) maximal.push_back(f);
    }
    std::sort(maximal.begin(), maximal.end(), face_less);
    return SimplicialComplex{ground, std::move(maximal)};
}

SimplicialComplex empty_complex(std::uint32_t ground) {
    return SimplicialComplex{ground, {VSet{}}};
}

SimplicialComplex independence_complex(const Graph& g) {
    // Bron-Kerbosch with pivoting on the non-adjacency relation.
    std::vector<VSet> maximal;
    std::vector<VSet> nonadj(g.n);
    VSet all = VSet::first_n(g.n);
    for (std::uint32_t v = 0; v < g.n; ++v) {
        nonadj[v] = all.minus(g.adj[v]);
        nonadj[v].reset(v);
    }
    auto expand = [&](auto&& self, VSet r, VSet p, VSet x) -> void {
        if (p.empty() && x.empty()) {
            maximal.push_back(r);
            return;
        }
        VSet px = p | x;
        std::uint32_t pivot = VSet::kCapacity, best = 0;
        px.for_each([&](std::uint32_t u) {
            std::uint32_t c = (p & nonadj[u]).count();
            if (pivot == VSet::kCapacity || c > best) {
                pivot = u;
                best = c;
            }
        });
        VSet todo = p.minus(nonadj[pivot]);
        todo.for_each([&](std::uint32_t v) {
            VSet rv = r;
            rv.set(v);
            self(self, rv, p & nonadj[v], x & nonadj[v]);
            p.reset(v);
            x.set(v);
        });
    };
    expand(expand, VSet{}, all, VSet{});
    return make_complex(g.n, std::move(maximal));
}

SimplicialComplex matching_complex(const Graph& h) {
    return independence_complex(line_graph(h).first);
}

SimplicialComplex link(const SimplicialComplex& c, const VSet& face) {
    std::vector<VSet> out;
    for (const VSet& f : c.facets)
        if (face.is_subset_of(f)) out.push_back(f.minus(face));
    if (out.empty()) throw invalid_input("link: argument is not a face of the complex");
    // facets of the link are exactly the stripped facets; an antichain already
    std::sort(out.begin(), out.end(), face_less);
    return SimplicialComplex{c.ground, std::move(out)};
}

SimplicialComplex delete_vertex(const SimplicialComplex& c, std::uint32_t v) {
    if (v >= c.ground) throw invalid_input("delete_vertex: vertex outside ground set");
    std::vector<VSet> faces;
    faces.reserve(c.facets.size());
    for (const VSet& f : c.facets) {
        VSet g = f;
        g.reset(v);
        faces.push_back(g);
    }
    return make_complex(c.ground, std::move(faces));
}

SimplicialComplex star(const SimplicialComplex& c, std::uint32_t v) {
    if (v >= c.ground) throw invalid_input("star: vertex outside ground set");
    std::vector<VSet> out;
    for (const VSet& f : c.facets)
        if (f.test(v)) out.push_back(f);
    if (out.empty())
        throw invalid_input("star: vertex is not a face, its star would be void");
    std::sort(out.begin(), out.end(), face_less);
    return SimplicialComplex{c.ground, std::move(out)};
}

SimplicialComplex core(const SimplicialComplex& c) {
    VSet cone = c.facets.front();
    for (const VSet& f : c.facets) cone &= f;
    if (cone.empty()) return c;
    std::vector<VSet> out;
    out.reserve(c.facets.size());
    for (const VSet& f : c.facets) out.push_back(f.minus(cone));
    std::sort(out.begin(), out.end(), face_less);
    return SimplicialComplex{c.ground, std::move(out)};
}

bool is_pure(const SimplicialComplex& c) {
    std::uint32_t k = c.facets.front().count();
    for (const VSet& f : c.facets)
        if (f.count() != k) return false;
    return true;
}

std::vector<std::vector<VSet>> faces_by_size(const SimplicialComplex& c) {
    std::unordered_set<VSet, VSetHash> seen(c.facets.begin(), c.facets.end());
    std::vector<VSet> frontier(c.facets.begin(), c.facets.end());
    while (!frontier.empty()) {
        std::vector<VSet> next;
        for (const VSet& f : frontier) {
            f.for_each([&](std::uint32_t v) {
                VSet sub = f;
                sub.reset(v);
                if (seen.insert(sub).second) next.push_back(sub);
            });
        }
        frontier = std::move(next);
    }
    std::uint32_t maxk = static_cast<std::uint32_t>(c.dim() + 1);
    std::vector<std::vector<VSet>> groups(maxk + 1);
    for (const VSet& f : seen) groups[f.count()].push_back(f);
    for (auto& g : groups) std::sort(g.begin(), g.end(), face_less);
    return groups;
}

std::vector<std::uint64_t> f_vector(const SimplicialComplex& c) {
    auto groups = faces_by_size(c);
    std::vector<std::uint64_t> f(groups.size());
    for (std::size_t k = 0; k < groups.size(); ++k) f[k] = groups[k].size();
    return f;
}

bool is_strongly_connected(const SimplicialComplex& c, std::string* diagnostic) {
    if (!is_pure(c)) {
        if (diagnostic) *diagnostic = "not pure";
        return false;
    }
    const std::size_t t = c.facets.size();
    if (t <= 1) return true;
    const std::uint32_t k = c.facets.front().count();
    // union-find over facets; adjacency = overlap in all but one vertex
    std::vector<std::uint32_t> up(t);
    for (std::uint32_t i = 0; i < t; ++i) up[i] = i;
    auto find = [&](std::uint32_t i) {
        while (up[i] != i) i = up[i] = up[up[i]];
        return i;
    };
    std::size_t parts = t;
    for (std::uint32_t i = 0; i < t && parts > 1; ++i)
        for (std::uint32_t j = i + 1; j < t; ++j) {
            if ((c.facets[i] & c.facets[j]).count() + 1 == k) {
                std::uint32_t a = find(i), b = find(j);
                if (a != b) {
                    up[a] = b;
                    --parts;
                }
            }
        }
    if (parts > 1 && diagnostic)
        *diagnostic = "facet graph has " + std::to_string(parts) + " components";
    return parts == 1;
}

bool is_shedding_vertex(const SimplicialComplex& c, std::uint32_t v) {
    if (v >= c.ground || !c.has_face(VSet::singleton(v)))
        throw invalid_input("is_shedding_vertex: vertex is not a face");
    SimplicialComplex deleted = delete_vertex(c, v);
    std::unordered_set<VSet, VSetHash> del_facets(deleted.facets.begin(), deleted.facets.end());
    // checking facets of the link suffices: a link face that is maximal in
    // the deletion pulls the link facet above it down to equality
    for (const VSet& f : c.facets) {
        if (!f.test(v)) continue;
        VSet lf = f;
        lf.reset(v);
        if (del_facets.count(lf)) return false;
    }
    return true;
}

CanonicalForm canonical_form(const SimplicialComplex& c) {
    CanonicalForm out;
    out.to_canonical.assign(c.ground, 0xffffffffu);
    std::uint32_t next = 0;
    for (const VSet& f : c.facets)
        f.for_each([&](std::uint32_t v) {
            if (out.to_canonical[v] == 0xffffffffu) {
                out.to_canonical[v] = next++;
                out.from_canonical.push_back(v);
            }
        });
    std::vector<VSet> relabeled;
    relabeled.reserve(c.facets.size());
    for (const VSet& f : c.facets) {
        VSet g;
        f.for_each([&](std::uint32_t v) { g.set(out.to_canonical[v]); });
        relabeled.push_back(g);
    }
    std::sort(relabeled.begin(), relabeled.end(), face_less);
    out.key.reserve(relabeled.size() * 5);
    for (const VSet& f : relabeled) {
        out.key.push_back(static_cast<char>(f.count()));
        f.for_each([&](std::uint32_t v) { out.key.push_back(static_cast<char>(v)); });
    }
    return out;
}

std::string canonical_key(const SimplicialComplex& c) { return canonical_form(c).key; }

} // namespace mcx
