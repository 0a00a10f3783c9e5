#include <doctest.h>

#include <sstream>

#include "kiso/edge_list.hpp"
#include "kiso/generators.hpp"

using namespace kiso;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

int error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_CASE("parse edge lists") {
    const Graph c5 = parse("# five cycle\n5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    CHECK(c5 == build_cycle(5));
    CHECK(parse("1 0\n") == build_complete(1));
    CHECK(parse("\n# nothing\n\n3 1\n\n1 2\n").edge_count() == 1);
    CHECK(parse("0 0\n").order() == 0);
}

TEST_CASE("parse errors name the line") {
    CHECK(error_line("") == 1);
    CHECK(error_line("3\n") == 1);
    CHECK(error_line("3 x\n") == 1);
    CHECK(error_line("3 4\n") == 1);
    CHECK(error_line("3 2\n0 1\n") == 3);
    CHECK(error_line("3 1\n0 1\n1 2\n") == 3);
    CHECK(error_line("# c\n3 2\n0 1\n1 1\n") == 4);
    CHECK(error_line("3 2\n0 1\n0 1\n") == 3);
    CHECK(error_line("3 1\n2 1\n") == 2);
    CHECK(error_line("3 1\n0 3\n") == 2);
    CHECK(error_line("3 1\n0 1 2\n") == 2);
    CHECK(error_line("3 1\n-1 2\n") == 2);
    CHECK(error_line("2000000 0\n") == 1);
    try {
        parse("3 2\n0 1\n");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 3: ", 0) == 0);
    }
    CHECK_THROWS_AS(read_edge_list("/nonexistent/graph.txt"), InputError);
}

TEST_CASE("format round trip") {
    CHECK(format_edge_list(build_complete(1)) == "1 0\n");
    CHECK(format_edge_list(build_path(3)) == "3 2\n0 1\n1 2\n");
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = gen_random_connected(15, 0.3, seed);
        const std::string text = format_edge_list(g);
        CHECK(parse(text) == g);
        CHECK(format_edge_list(parse(text)) == text);
    }
}
