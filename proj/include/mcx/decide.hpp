#ifndef MCX_DECIDE_HPP
#define MCX_DECIDE_HPP

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mcx/complex.hpp"
#include "mcx/field.hpp"
#include "mcx/graph.hpp"
#include "mcx/homology.hpp"

namespace mcx {

enum class Tri : std::uint8_t { False = 0, True = 1, Indeterminate = 2 };

inline const char* to_string(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        default: return "indeterminate";
    }
}

// Memo of decision results keyed by canonical facet sets (and field where
// relevant).  Get-or-compute is atomic under a mutex, so a cache may be
// shared between concurrently evaluated recursion branches.
class DecisionCache {
public:
    std::optional<bool> lookup_bool(const std::string& key);
    void store_bool(const std::string& key, bool value);

    std::optional<std::pair<bool, std::uint32_t>> lookup_vd(const std::string& key);
    void store_vd(const std::string& key, bool value, std::uint32_t shedding_vertex);

    const BettiTable* lookup_betti(const std::string& key);
    const BettiTable* store_betti(const std::string& key, BettiTable table);

    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, bool> bools_;
    std::unordered_map<std::string, std::pair<bool, std::uint32_t>> vd_;
    std::unordered_map<std::string, BettiTable> betti_;
};

// reduced_betti with memoization on the canonical facet key.
BettiTable reduced_betti_cached(const SimplicialComplex& c, const FieldSpec& field,
                                DecisionCache* cache);

// Reisner criterion in its vertex-link form: every vertex link is
// Cohen-Macaulay and the reduced homology of the complex vanishes below its
// dimension.
bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field,
                       DecisionCache* cache = nullptr);

// Core criterion: the core has the reduced homology of a sphere in every
// face link (0 below the link dimension, exactly 1 on it).
bool is_gorenstein(const SimplicialComplex& c, const FieldSpec& field,
                   DecisionCache* cache = nullptr);

constexpr std::uint64_t kUnlimitedBudget = ~std::uint64_t{0};

struct VdResult {
    Tri value = Tri::False;
    // Shedding order along the deletion chain down to a simplex; present
    // exactly when value is True.
    std::vector<std::uint32_t> shedding_order;
    std::uint64_t nodes = 0;
};

// Exhaustive search over shedding vertices, memoized on canonical facet
// sets.  A node budget of kUnlimitedBudget never yields Indeterminate.
VdResult is_vertex_decomposable(const SimplicialComplex& c, DecisionCache* cache = nullptr,
                                std::uint64_t budget = kUnlimitedBudget);

struct ShellResult {
    Tri value = Tri::False;
    std::vector<VSet> order;  // a shelling order when value is True
    std::string note;
    std::uint64_t nodes = 0;
};

// Backtracking search for a shelling order of a pure complex; non-pure
// complexes are reported False with a note.  Budget exhaustion is reported
// as Indeterminate, distinct from False.
ShellResult is_shellable(const SimplicialComplex& c, std::uint64_t budget = kUnlimitedBudget);

enum class EulerSign : std::uint8_t { Passes, Fails, NotApplicable };

inline const char* to_string(EulerSign s) {
    switch (s) {
        case EulerSign::Passes: return "passes";
        case EulerSign::Fails: return "fails";
        default: return "not_applicable";
    }
}

// Necessary condition for the independence complex of g to be Gorenstein:
// I(g, -1) = (-1)^(dim + 1).  Applicable only when the complex is its own
// core.
EulerSign euler_sign_test(const Graph& g);

} // namespace mcx

#endif // MCX_DECIDE_HPP
