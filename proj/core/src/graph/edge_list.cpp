#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "commkit/error.hpp"
#include "commkit/graph.hpp"

namespace commkit {

namespace {

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

bool parse_id(std::string_view token, std::uint64_t& out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

} // namespace

Graph read_edge_list(std::istream& in, std::size_t node_count) {
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::size_t declared_nodes = 0;
    std::size_t max_id_plus_one = 0;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            // Optional "# nodes <N>" header keeps trailing isolated nodes.
            std::istringstream header(line.substr(first + 1));
            std::string key;
            std::size_t value = 0;
            if (header >> key && key == "nodes" && header >> value) declared_nodes = value;
            continue;
        }
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        std::uint64_t u = 0, v = 0;
        if (!parse_id(a, u) || !parse_id(b, v) || (fields >> extra)) {
            throw ArgumentError(at_line(line_no) + "expected \"u v\" with non-negative integer ids");
        }
        if (u > 0xffffffffULL - 1 || v > 0xffffffffULL - 1) {
            throw ArgumentError(at_line(line_no) + "node id too large");
        }
        if (u == v) throw ArgumentError(at_line(line_no) + "self-loop on node " + a);
        Edge e{static_cast<node>(std::min(u, v)), static_cast<node>(std::max(u, v))};
        if (!seen.insert(e).second) {
            throw ArgumentError(at_line(line_no) + "duplicate edge " + a + " " + b);
        }
        edges.push_back(e);
        max_id_plus_one = std::max<std::size_t>(max_id_plus_one, e.v + 1);
    }
    std::size_t n = std::max({node_count, declared_nodes, max_id_plus_one});
    return Graph(n, edges);
}

Graph read_edge_list_file(const std::string& path, std::size_t node_count) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open edge list '" + path + "'");
    try {
        return read_edge_list(in, node_count);
    } catch (const ArgumentError& e) {
        throw ArgumentError(path + ": " + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "# nodes " << g.node_count() << "\n";
    out << "# edges " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write edge list '" + path + "'");
    write_edge_list(out, g);
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace commkit
