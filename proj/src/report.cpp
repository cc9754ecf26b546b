#include "mcx/report.hpp"

namespace mcx {

Json graph_summary(const Graph& g) {
    Json j;
    j["vertices"] = g.n;
    j["edges"] = g.edges.size();
    return j;
}

Json complex_summary(const SimplicialComplex& c) {
    Json j;
    j["ground"] = c.ground;
    j["dim"] = c.dim();
    j["facets"] = c.facets.size();
    j["f_vector"] = f_vector(c);
    j["pure"] = is_pure(c);
    std::string why;
    j["strongly_connected"] = is_strongly_connected(c, &why);
    return j;
}

Json betti_json(const BettiTable& b) {
    Json j;
    j["field"] = b.field.to_string();
    Json table = Json::object();
    for (int d = -1; d <= b.dim; ++d) table[std::to_string(d)] = b.at(d);
    j["betti"] = table;
    return j;
}

Json witness_json(const std::vector<std::uint32_t>& shedding_order) {
    Json j;
    j["shedding_order"] = shedding_order;
    return j;
}

Json witness_json(const std::vector<VSet>& shelling_order) {
    Json order = Json::array();
    for (const VSet& f : shelling_order) order.push_back(f.elements());
    Json j;
    j["shelling_order"] = order;
    return j;
}

Json classification_json(const ClassReport& r) {
    Json j;
    j["connected"] = r.connected;
    j["gorenstein_graph"] = r.gorenstein_graph;
    auto put = [&](const char* key, const std::optional<bool>& v) {
        j[key] = v.has_value() ? Json(*v) : Json("not_applicable");
    };
    put("star", r.star);
    put("star_triangle", r.star_triangle);
    put("cameron_walker", r.cameron_walker);
    put("im_eq_m", r.im_eq_m);
    put("girth5_cm", r.girth5_cm);
    if (r.decomposition) {
        const CWDecomposition& d = *r.decomposition;
        Json dec;
        dec["x"] = d.x;
        dec["y"] = d.y;
        Json base = Json::array();
        for (auto [u, v] : d.base_edges) base.push_back({u, v});
        dec["base_edges"] = base;
        Json leaves = Json::object();
        for (const auto& [x, le] : d.leaf_edges) {
            Json arr = Json::array();
            for (auto [u, v] : le) arr.push_back({u, v});
            leaves[std::to_string(x)] = arr;
        }
        dec["leaf_edges"] = leaves;
        Json tris = Json::object();
        for (const auto& [y, ts] : d.pendant_triangles) {
            Json arr = Json::array();
            for (const auto& t : ts) arr.push_back({t[0], t[1], t[2]});
            tris[std::to_string(y)] = arr;
        }
        dec["pendant_triangles"] = tris;
        j["decomposition"] = dec;
    }
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

Json make_report(const Graph& input, const SimplicialComplex& complex_of_input) {
    Json j;
    j["input"] = graph_summary(input);
    j["complex"] = complex_summary(complex_of_input);
    j["checks"] = Json::object();
    return j;
}

void attach_timing(Json& report, double milliseconds) {
    report["timing_ms"] = milliseconds;
}

} // namespace mcx
