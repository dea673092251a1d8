#include "sqroot/io.hpp"

#include "support/builders.hpp"

#include <doctest.h>

#include <random>
#include <string>

using namespace sqroot;
using namespace sqroot::testing;

namespace {

// Independent re-encoding: collect the column-major upper-triangle bits and
// pack six at a time, high bit first, offset by 63.
std::string reference_graph6(const Graph& g) {
    const int n = g.vertex_count();
    REQUIRE(n <= 62);
    std::string out(1, static_cast<char>(n + 63));
    std::vector<int> bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            bits.push_back(g.has_edge(row, col) ? 1 : 0);
    while (bits.size() % 6 != 0)
        bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b)
            value = value * 2 + bits[i + static_cast<std::size_t>(b)];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

}  // namespace

TEST_CASE("graph6 encoding of K3 is exactly Bw") {
    const Graph k3 = complete(3);
    CHECK(emit_graph6(k3) == "Bw");
    CHECK(emit_graph6(k3) == reference_graph6(k3));
}

TEST_CASE("graph6 round trip on C7 and fixed shapes") {
    for (const Graph& g : {cycle(7), path(5), complete(6), Graph(0), Graph(1), star(9)}) {
        CHECK(parse_graph6(emit_graph6(g)) == g);
        if (g.vertex_count() <= 62)
            CHECK(emit_graph6(g) == reference_graph6(g));
    }
}

TEST_CASE("graph6 round trip on random graphs, including multi-byte orders") {
    std::mt19937_64 rng(20260809);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 80));
        const Graph g = random_graph(rng, n, 3 * n);
        const std::string text = emit_graph6(g);
        CHECK(parse_graph6(text) == g);
        if (n <= 62)
            CHECK(text == reference_graph6(g));
    }
}

TEST_CASE("graph6 accepts the standard header and a trailing newline") {
    const Graph k3 = complete(3);
    CHECK(parse_graph6(">>graph6<<Bw") == k3);
    CHECK(parse_graph6("Bw\n") == k3);
}

TEST_CASE("graph6 decodes long-form orders like nauty's reader") {
    // A 4-byte order field for n=3: '~' then 0,0,3 in offset-63 groups.
    CHECK(parse_graph6("~??Bw") == complete(3));
    // An 8-byte order field ('~~' escape) for the same graph.
    CHECK(parse_graph6("~~?????Bw") == complete(3));
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);       // missing body
    CHECK_THROWS_AS(parse_graph6("Bw1"), ParseError);     // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B\x01"), ParseError);   // byte out of range
    try {
        parse_graph6("B\x01");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("graph6 parser survives random byte noise") {
    std::mt19937_64 rng(616161);
    for (int trial = 0; trial < 5000; ++trial) {
        const int len = static_cast<int>(uniform_below(rng, 30));
        std::string text;
        for (int i = 0; i < len; ++i)
            text.push_back(static_cast<char>(uniform_below(rng, 256)));
        try {
            const Graph g = parse_graph6(text);
            // Accepted inputs must round-trip to an equivalent encoding.
            CHECK(parse_graph6(emit_graph6(g)) == g);
        } catch (const ParseError& e) {
            CHECK(e.offset() <= text.size());
        }
    }
}

TEST_CASE("edge list parsing") {
    const Graph p3 = parse_edgelist("3 2\n0 1\n1 2\n");
    CHECK(p3 == path(3));
    CHECK(parse_edgelist("3 2\n0 1\n1 2") == path(3));
    CHECK(parse_edgelist("1 0\n").vertex_count() == 1);

    CHECK_THROWS_AS(parse_edgelist("3 2\n0 1\n"), ParseError);      // missing edge
    CHECK_THROWS_AS(parse_edgelist("3 1\n0 7\n"), ParseError);      // bad endpoint
    CHECK_THROWS_AS(parse_edgelist("3 1\n1 1\n"), ParseError);      // loop
    CHECK_THROWS_AS(parse_edgelist("x"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("3 1\n0 1\nleftover"), ParseError);
}

TEST_CASE("edge list round trip") {
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 30));
        const Graph g = random_graph(rng, n, 2 * n);
        CHECK(parse_edgelist(emit_edgelist(g)) == g);
    }
}

TEST_CASE("dot emission marks non-highlighted edges dashed") {
    const Graph k3 = complete(3);
    const std::string all_solid = emit_dot(k3);
    CHECK(all_solid.find("0 -- 1;") != std::string::npos);
    CHECK(all_solid.find("dashed") == std::string::npos);

    const std::string mixed = emit_dot(k3, {Edge(0, 1)});
    CHECK(mixed.find("0 -- 1;") != std::string::npos);
    CHECK(mixed.find("0 -- 2 [style=dashed];") != std::string::npos);
    CHECK(mixed.find("1 -- 2 [style=dashed];") != std::string::npos);
}
