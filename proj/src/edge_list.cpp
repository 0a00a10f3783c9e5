#include "kiso/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace kiso {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

long long parse_count(std::string_view field, int line, const char* what) {
    long long value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || end != field.data() + field.size() || value < 0)
        throw ParseError(line, std::string("expected non-negative integer for ") + what + ", got '" +
                                   std::string(field) + "'");
    return value;
}

bool is_skippable(std::string_view line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string_view::npos || line[pos] == '#';
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_skippable(line)) continue;
        const auto fields = split_fields(line);
        if (fields.size() != 2)
            throw ParseError(line_no, "expected two fields, found " + std::to_string(fields.size()));
        if (!have_header) {
            n = parse_count(fields[0], line_no, "vertex count");
            m = parse_count(fields[1], line_no, "edge count");
            if (n > 1'000'000) throw ParseError(line_no, "vertex count too large");
            if (m > n * (n - 1) / 2)
                throw ParseError(line_no, "edge count " + std::to_string(m) + " exceeds n(n-1)/2");
            have_header = true;
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(line_no, "more edge lines than the declared m = " + std::to_string(m));
        const long long u = parse_count(fields[0], line_no, "endpoint");
        const long long v = parse_count(fields[1], line_no, "endpoint");
        if (u >= n || v >= n) throw ParseError(line_no, "endpoint out of range 0.." + std::to_string(n - 1));
        if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
        if (u > v) throw ParseError(line_no, "edge endpoints must satisfy u < v");
        const Edge e{static_cast<int>(u), static_cast<int>(v)};
        if (!seen.insert(e).second)
            throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        edges.push_back(e);
    }
    if (!have_header) throw ParseError(line_no + 1, "missing 'n m' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(line_no + 1, "declared m = " + std::to_string(m) + " but found " +
                                          std::to_string(edges.size()) + " edge lines");
    return Graph(static_cast<int>(n), edges);
}

Graph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string format_edge_list(const Graph& g) {
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

}  // namespace kiso
