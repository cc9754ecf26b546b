#include "mcx/graph_io.hpp"

#include <sstream>

#include "mcx/error.hpp"

namespace mcx {

namespace {

bool next_data_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos) continue;
        if (line[pos] == '#') continue;
        return true;
    }
    return false;
}

} // namespace

Graph parse_graph_file(std::istream& in) {
    std::string line;
    if (!next_data_line(in, line)) throw invalid_input("graph file: missing header line");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw invalid_input("graph file: header must be 'n m'");
    std::string trailing;
    if (header >> trailing) throw invalid_input("graph file: trailing tokens after header");

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_data_line(in, line))
            throw invalid_input("graph file: expected " + std::to_string(m) + " edge lines, got " +
                                std::to_string(i));
        std::istringstream es(line);
        long long u = -1, v = -1;
        if (!(es >> u >> v) || u < 0 || v < 0)
            throw invalid_input("graph file: malformed edge line '" + line + "'");
        if (es >> trailing) throw invalid_input("graph file: trailing tokens on edge line");
        if (u >= n || v >= n)
            throw invalid_input("graph file: endpoint out of range on line '" + line + "'");
        edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
    }
    if (next_data_line(in, line))
        throw invalid_input("graph file: more edge lines than the header declares");
    return make_graph(static_cast<std::uint32_t>(n), edges);
}

Graph parse_graph_file(const std::string& text) {
    std::istringstream in(text);
    return parse_graph_file(in);
}

std::string serialize_graph_file(const Graph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edges.size() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph parse_graph6(const std::string& line) {
    std::string s = line;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw invalid_input("graph6: empty input");
    int n = s[0] - 63;
    if (n < 0 || n > 62)
        throw invalid_input("graph6: only graphs with n <= 62 are supported");
    std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
    if (s.size() != 1 + need) throw invalid_input("graph6: wrong length for declared n");
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = s[1 + bit / 6] - 63;
            if (byte < 0 || byte > 63) throw invalid_input("graph6: byte out of range");
            if ((byte >> (5 - bit % 6)) & 1)
                edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
    return make_graph(static_cast<std::uint32_t>(n), edges);
}

std::string serialize_graph6(const Graph& g) {
    if (g.n > 62) throw invalid_input("graph6: only graphs with n <= 62 are supported");
    std::string out(1, static_cast<char>(63 + g.n));
    std::size_t bits = static_cast<std::size_t>(g.n) * (g.n - 1) / 2;
    std::string data((bits + 5) / 6, static_cast<char>(63));
    std::size_t bit = 0;
    for (std::uint32_t j = 1; j < g.n; ++j)
        for (std::uint32_t i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i, j))
                data[bit / 6] = static_cast<char>(data[bit / 6] + (1 << (5 - bit % 6)));
    return out + data;
}

namespace {

// The two pinned example graphs.  "paper-fig2-rightmost" is K_{3,4}: the
// unique 12-edge graph whose line graph has independence polynomial
// 1 + 12x + 36x^2 + 24x^3 (its 1-, 2- and 3-matchings).  "paper-fig3" is a
// Cameron-Walker graph with bipartite base on {0,1} x {2,3}, three leaf
// edges and three pendant triangles.
Graph make_fig2_rightmost() {
    return complete_bipartite(3, 4);
}

Graph make_fig3() {
    CWParams params;
    params.base = make_graph(4, {{0, 2}, {0, 3}, {1, 2}});
    params.part_x = {0, 1};
    params.leaf_mult[0] = 2;
    params.leaf_mult[1] = 1;
    params.triangle_mult[2] = 1;
    params.triangle_mult[3] = 2;
    return cameron_walker_graph(params);
}

} // namespace

std::optional<Graph> builtin_graph(const std::string& name) {
    if (name == "paper-fig2-rightmost") return make_fig2_rightmost();
    if (name == "paper-fig3") return make_fig3();
    return std::nullopt;
}

std::vector<std::string> builtin_graph_names() {
    return {"paper-fig2-rightmost", "paper-fig3"};
}

} // namespace mcx
