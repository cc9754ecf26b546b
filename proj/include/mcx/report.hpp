#ifndef MCX_REPORT_HPP
#define MCX_REPORT_HPP

#include <string>

#include <json.hpp>

#include "mcx/classify.hpp"
#include "mcx/complex.hpp"
#include "mcx/decide.hpp"
#include "mcx/graph.hpp"
#include "mcx/homology.hpp"

namespace mcx {

using Json = nlohmann::ordered_json;

// Report fragments.  Serialization is deterministic for identical inputs;
// the timing field is the only run-dependent key.
Json graph_summary(const Graph& g);
Json complex_summary(const SimplicialComplex& c);
Json betti_json(const BettiTable& b);
Json witness_json(const std::vector<std::uint32_t>& shedding_order);
Json witness_json(const std::vector<VSet>& shelling_order);
Json classification_json(const ClassReport& r);

Json make_report(const Graph& input, const SimplicialComplex& complex_of_input);
void attach_timing(Json& report, double milliseconds);

} // namespace mcx

#endif // MCX_REPORT_HPP
