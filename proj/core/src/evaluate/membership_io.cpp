#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "commkit/error.hpp"
#include "commkit/partition.hpp"

namespace commkit {

namespace {

bool parse_u64(const std::string& token, std::uint64_t& out) {
    if (token.empty()) return false;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
    return ec == std::errc{} && ptr == token.data() + token.size();
}

} // namespace

Partition read_membership(std::istream& in, std::size_t node_count) {
    std::vector<std::uint64_t> labels;
    std::vector<bool> seen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        std::string a, b, extra;
        fields >> a >> b;
        std::uint64_t v = 0, c = 0;
        if (!parse_u64(a, v) || !parse_u64(b, c) || (fields >> extra)) {
            throw ArgumentError("line " + std::to_string(line_no) +
                                ": expected \"node community\" with non-negative integers");
        }
        if (v >= 0xffffffffULL) throw ArgumentError("line " + std::to_string(line_no) + ": node id too large");
        if (v >= labels.size()) {
            labels.resize(v + 1);
            seen.resize(v + 1, false);
        }
        if (seen[v]) {
            throw ArgumentError("line " + std::to_string(line_no) + ": node " + a + " assigned twice");
        }
        seen[v] = true;
        labels[v] = c;
    }
    if (node_count && labels.size() > node_count) {
        throw ArgumentError("membership names node " + std::to_string(labels.size() - 1) +
                            " but the graph has " + std::to_string(node_count) + " nodes");
    }
    if (node_count > labels.size()) seen.resize(node_count, false);
    for (std::size_t v = 0; v < seen.size(); ++v) {
        if (!seen[v]) throw ArgumentError("membership is missing node " + std::to_string(v));
    }
    return Partition(std::span<const std::uint64_t>(labels));
}

Partition read_membership_file(const std::string& path, std::size_t node_count) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open membership file '" + path + "'");
    try {
        return read_membership(in, node_count);
    } catch (const ArgumentError& e) {
        throw ArgumentError(path + ": " + e.what());
    }
}

void write_membership(std::ostream& out, const Partition& p) {
    out << "# node community\n";
    for (node v = 0; v < p.node_count(); ++v) out << v << ' ' << p[v] << '\n';
}

void write_membership_file(const std::string& path, const Partition& p) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write membership file '" + path + "'");
    write_membership(out, p);
    if (!out) throw IoError("write failed for '" + path + "'");
}

} // namespace commkit
