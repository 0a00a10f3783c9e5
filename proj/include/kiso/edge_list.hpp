#pragma once

#include <iosfwd>
#include <string>

#include "kiso/graph.hpp"

namespace kiso {

// Edge-list text format:
//
//   # comment lines start with '#'; blank lines are ignored
//   n m
//   u v        (m lines, 0 <= u < v < n, no duplicates)
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::string& path);

// Canonical form: header, then edges sorted ascending, one per line.
void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

}  // namespace kiso
