#include "mcx/decide.hpp"

#include <algorithm>
#include <unordered_set>

namespace mcx {

std::optional<bool> DecisionCache::lookup_bool(const std::string& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = bools_.find(key);
    if (it == bools_.end()) return std::nullopt;
    return it->second;
}

void DecisionCache::store_bool(const std::string& key, bool value) {
    std::lock_guard<std::mutex> lock(mutex_);
    bools_.emplace(key, value);
}

std::optional<std::pair<bool, std::uint32_t>> DecisionCache::lookup_vd(const std::string& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = vd_.find(key);
    if (it == vd_.end()) return std::nullopt;
    return it->second;
}

void DecisionCache::store_vd(const std::string& key, bool value, std::uint32_t shedding_vertex) {
    std::lock_guard<std::mutex> lock(mutex_);
    vd_.emplace(key, std::make_pair(value, shedding_vertex));
}

const BettiTable* DecisionCache::lookup_betti(const std::string& key) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = betti_.find(key);
    return it == betti_.end() ? nullptr : &it->second;
}

const BettiTable* DecisionCache::store_betti(const std::string& key, BettiTable table) {
    std::lock_guard<std::mutex> lock(mutex_);
    return &betti_.emplace(key, std::move(table)).first->second;
}

std::size_t DecisionCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return bools_.size() + vd_.size() + betti_.size();
}

namespace {

BettiTable betti_cached(const SimplicialComplex& c, const FieldSpec& field, DecisionCache* cache) {
    if (!cache) return reduced_betti(c, field);
    std::string key = "b|" + field.to_string() + "|" + canonical_key(c);
    if (const BettiTable* hit = cache->lookup_betti(key)) return *hit;
    return *cache->store_betti(key, reduced_betti(c, field));
}

bool homology_vanishes_below_dim(const BettiTable& b) {
    for (int i = -1; i < b.dim; ++i)
        if (b.at(i) != 0) return false;
    return true;
}

} // namespace

BettiTable reduced_betti_cached(const SimplicialComplex& c, const FieldSpec& field,
                                DecisionCache* cache) {
    return betti_cached(c, field, cache);
}

bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field, DecisionCache* cache) {
    if (c.facets.size() == 1 && c.facets.front().empty()) return true;  // {}
    std::string key;
    if (cache) {
        key = "cm|" + field.to_string() + "|" + canonical_key(c);
        if (auto hit = cache->lookup_bool(key)) return *hit;
    }
    bool result = true;
    VSet used = c.used_vertices();
    used.for_each([&](std::uint32_t v) {
        if (result && !is_cohen_macaulay(link(c, VSet::singleton(v)), field, cache)) result = false;
    });
    if (result) result = homology_vanishes_below_dim(betti_cached(c, field, cache));
    if (cache) cache->store_bool(key, result);
    return result;
}

namespace {

// Sphere-like homology of every face link of the core.
bool gorenstein_core_check(const SimplicialComplex& core_cx, const FieldSpec& field,
                           DecisionCache* cache) {
    auto groups = faces_by_size(core_cx);
    for (const auto& group : groups)
        for (const VSet& face : group) {
            SimplicialComplex lk = link(core_cx, face);
            BettiTable b = betti_cached(lk, field, cache);
            if (!homology_vanishes_below_dim(b)) return false;
            if (b.at(b.dim) != 1) return false;
        }
    return true;
}

} // namespace

bool is_gorenstein(const SimplicialComplex& c, const FieldSpec& field, DecisionCache* cache) {
    SimplicialComplex cored = core(c);
    if (cored.facets.size() == 1 && cored.facets.front().empty()) return true;  // simplex
    std::string key;
    if (cache) {
        key = "gor|" + field.to_string() + "|" + canonical_key(cored);
        if (auto hit = cache->lookup_bool(key)) return *hit;
    }
    bool result = gorenstein_core_check(cored, field, cache);
    if (cache) cache->store_bool(key, result);
    return result;
}

namespace {

struct VdSearch {
    DecisionCache* cache;
    DecisionCache local;  // used when the caller supplies none
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    DecisionCache& memo() { return cache ? *cache : local; }

    // Vertices covering the most facets first: mirrors the constructive
    // shedding choices for the structured families and fails fast elsewhere.
    std::vector<std::uint32_t> candidates(const SimplicialComplex& c) const {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> cover;
        c.used_vertices().for_each([&](std::uint32_t v) {
            std::uint32_t n = 0;
            for (const VSet& f : c.facets) n += f.test(v);
            cover.emplace_back(n, v);
        });
        std::sort(cover.begin(), cover.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        std::vector<std::uint32_t> out;
        out.reserve(cover.size());
        for (auto& [n, v] : cover) out.push_back(v);
        return out;
    }

    Tri run(const SimplicialComplex& c, std::uint32_t depth) {
        if (c.is_simplex()) return Tri::True;
        if (++nodes > budget) {
            exhausted = true;
            return Tri::Indeterminate;
        }
        CanonicalForm form = canonical_form(c);
        std::string key = "vd|" + form.key;
        if (auto hit = memo().lookup_vd(key)) return hit->first ? Tri::True : Tri::False;

        // necessary conditions: a pure vertex decomposable complex is
        // shellable, hence CM over every field, hence strongly connected
        if (is_pure(c)) {
            if (!is_strongly_connected(c)) {
                memo().store_vd(key, false, 0);
                return Tri::False;
            }
            // the CM filter is cheap on small complexes and pays for itself
            // at the root, where it converts exhaustive refutations into one
            // homology computation
            if (depth == 0 || c.facets.size() <= 150) {
                for (const FieldSpec& f :
                     {FieldSpec::gf(2), FieldSpec::gf(3), FieldSpec::rationals()}) {
                    if (!is_cohen_macaulay(c, f, &memo())) {
                        memo().store_vd(key, false, 0);
                        return Tri::False;
                    }
                }
            }
        }

        bool saw_indeterminate = false;
        for (std::uint32_t v : candidates(c)) {
            if (!is_shedding_vertex(c, v)) continue;
            Tri lk = run(link(c, VSet::singleton(v)), depth + 1);
            if (lk == Tri::Indeterminate) {
                saw_indeterminate = true;
                continue;
            }
            if (lk == Tri::False) continue;
            Tri del = run(delete_vertex(c, v), depth + 1);
            if (del == Tri::Indeterminate) {
                saw_indeterminate = true;
                continue;
            }
            if (del == Tri::True) {
                // the shedding vertex is cached in canonical coordinates so
                // any complex sharing the key can translate it back
                memo().store_vd(key, true, form.to_canonical[v]);
                return Tri::True;
            }
        }
        if (saw_indeterminate) return Tri::Indeterminate;
        memo().store_vd(key, false, 0);
        return Tri::False;
    }

    // Walks the memoized decisions down the deletion chain.
    std::vector<std::uint32_t> witness(SimplicialComplex c) {
        std::vector<std::uint32_t> order;
        while (!c.is_simplex()) {
            CanonicalForm form = canonical_form(c);
            auto hit = memo().lookup_vd("vd|" + form.key);
            if (!hit || !hit->first) break;
            std::uint32_t v = form.from_canonical[hit->second];
            order.push_back(v);
            c = delete_vertex(c, v);
        }
        return order;
    }
};

} // namespace

VdResult is_vertex_decomposable(const SimplicialComplex& c, DecisionCache* cache,
                                std::uint64_t budget) {
    VdSearch search{cache, {}, budget};
    VdResult result;
    result.value = search.run(c, 0);
    result.nodes = search.nodes;
    if (result.value == Tri::True) result.shedding_order = search.witness(c);
    return result;
}

namespace {

struct ShellSearch {
    const std::vector<VSet>& facets;
    std::uint32_t facet_card;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<std::uint32_t> order;
    std::unordered_set<std::string> failed_states;
    std::vector<char> placed;

    ShellSearch(const std::vector<VSet>& fs, std::uint32_t card, std::uint64_t b)
        : facets(fs), facet_card(card), budget(b), placed(fs.size(), 0) {}

    std::string state_key() const {
        std::string s((facets.size() + 7) / 8, '\0');
        for (std::size_t i = 0; i < facets.size(); ++i)
            if (placed[i]) s[i / 8] = static_cast<char>(s[i / 8] | (1 << (i % 8)));
        return s;
    }

    // F can extend the shelling iff every intersection with a placed facet
    // sits inside one of cardinality |F| - 1.
    bool feasible(std::uint32_t f) const {
        const VSet& cand = facets[f];
        std::vector<VSet> ridges;
        for (std::uint32_t i : order) {
            VSet inter = cand & facets[i];
            if (inter.count() + 1 == facet_card) ridges.push_back(inter);
        }
        if (ridges.empty()) return false;
        for (std::uint32_t i : order) {
            VSet inter = cand & facets[i];
            if (inter.count() + 1 == facet_card) continue;
            bool covered = false;
            for (const VSet& r : ridges)
                if (inter.is_subset_of(r)) {
                    covered = true;
                    break;
                }
            if (!covered) return false;
        }
        return true;
    }

    // failed-state entries beyond this only cost time, not correctness
    static constexpr std::size_t kStateMemoCap = 4'000'000;

    bool dfs() {
        if (order.size() == facets.size()) return true;
        if (++nodes > budget) {
            exhausted = true;
            return false;
        }
        std::string key = state_key();
        if (failed_states.count(key)) return false;
        for (std::uint32_t f = 0; f < facets.size(); ++f) {
            if (placed[f]) continue;
            if (!order.empty() && !feasible(f)) continue;
            placed[f] = 1;
            order.push_back(f);
            if (dfs()) return true;
            order.pop_back();
            placed[f] = 0;
            if (exhausted) return false;
        }
        if (failed_states.size() < kStateMemoCap) failed_states.insert(std::move(key));
        return false;
    }
};

} // namespace

ShellResult is_shellable(const SimplicialComplex& c, std::uint64_t budget) {
    ShellResult result;
    if (!is_pure(c)) {
        result.value = Tri::False;
        result.note = "not pure";
        return result;
    }
    if (c.facets.size() <= 1) {
        result.value = Tri::True;
        result.order = c.facets;
        return result;
    }
    std::uint32_t card = c.facets.front().count();
    if (card == 1) {
        // isolated points shell in any order
        result.value = Tri::True;
        result.order = c.facets;
        return result;
    }
    ShellSearch search(c.facets, card, budget);
    bool ok = search.dfs();
    result.nodes = search.nodes;
    if (ok) {
        result.value = Tri::True;
        for (std::uint32_t i : search.order) result.order.push_back(c.facets[i]);
    } else if (search.exhausted) {
        result.value = Tri::Indeterminate;
        result.note = "node budget exhausted";
    } else {
        result.value = Tri::False;
    }
    return result;
}

EulerSign euler_sign_test(const Graph& g) {
    SimplicialComplex cx = independence_complex(g);
    if (core(cx) != cx) return EulerSign::NotApplicable;
    Polynomial ip = independence_polynomial(g);
    BigInt value = ip.evaluate(-1);
    int dim = cx.dim();
    BigInt target{(dim + 1) % 2 == 0 ? 1 : -1};
    return value == target ? EulerSign::Passes : EulerSign::Fails;
}

} // namespace mcx
