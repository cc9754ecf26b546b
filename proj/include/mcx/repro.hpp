#ifndef MCX_REPRO_HPP
#define MCX_REPRO_HPP

#include <string>
#include <vector>

#include "mcx/decide.hpp"

namespace mcx {

// One verifiable claim of a reproduction suite.
struct Claim {
    std::string name;
    bool pass;
    std::string detail;  // expected/got on failure, observation otherwise
};

struct SuiteResult {
    std::string title;
    std::vector<Claim> claims;

    bool all_pass() const {
        for (const Claim& c : claims)
            if (!c.pass) return false;
        return true;
    }
};

// Numbered verification criteria.  A shared cache lets the heavier
// homology and decomposition results flow between them.
SuiteResult run_criterion(int number, DecisionCache& cache);
int criterion_count();
std::string criterion_title(int number);

// CLI suite names mapped onto criteria numbers.
std::vector<std::string> suite_names();
std::vector<int> suite_criteria(const std::string& name);

} // namespace mcx

#endif // MCX_REPRO_HPP
