#include <doctest.h>

#include <functional>

#include "nfalen/error.hpp"
#include "nfalen/random.hpp"
#include "nfalen/reduce.hpp"
#include "nfalen/text_format.hpp"

using namespace nfalen;

namespace {

std::size_t parse_error_line(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.line();
    }
    FAIL("expected ParseError");
    return 0;
}

}  // namespace

TEST_CASE("parse_nfa") {
    const Nfa nfa = parse_nfa(
        "# comment\n"
        "states 3\n"
        "\n"
        "alphabet b a\n"
        "start 0\n"
        "final 2\n"
        "1 b 2\n"
        "0 a 1\r\n");
    CHECK(nfa == Nfa(3, "ab", 0, {2}, {{0, 'a', 1}, {1, 'b', 2}}));

    const Nfa no_finals = parse_nfa("states 1\nalphabet a\nstart 0\nfinal\n");
    CHECK(no_finals.finals().empty());
}

TEST_CASE("format_nfa is canonical") {
    const Nfa nfa(3, "ba", 0, {2, 1}, {{1, 'b', 2}, {0, 'a', 1}});
    CHECK(format_nfa(nfa) ==
          "states 3\n"
          "alphabet a b\n"
          "start 0\n"
          "final 1 2\n"
          "0 a 1\n"
          "1 b 2\n");
}

TEST_CASE("parse_nfa errors carry line numbers") {
    CHECK(parse_error_line([] { parse_nfa("states 2\nalphabet a\nstart 0\nfinal 1\n0 a 5\n"); }) == 5);
    CHECK(parse_error_line([] { parse_nfa("states 2\nalphabet a\nstart 3\nfinal 1\n"); }) == 3);
    CHECK(parse_error_line([] { parse_nfa("states 2\nalphabet a\nstart 0\nfinal 1\n0 b 1\n"); }) == 5);
    CHECK(parse_error_line([] { parse_nfa("states 2\nalphabet a\nstart 0\nfinal 1\n0 a\n"); }) == 5);
    CHECK(parse_error_line([] { parse_nfa("states x\n"); }) == 1);
    CHECK(parse_error_line([] { parse_nfa("states 0\n"); }) == 1);
    CHECK(parse_error_line([] { parse_nfa("states 2\nstates 2\n"); }) == 2);
    CHECK(parse_error_line([] { parse_nfa("states 2\nalphabet ab\n"); }) == 2);
    CHECK(parse_error_line([] { parse_nfa("states 2\nalphabet a a\n"); }) == 2);
    CHECK(parse_error_line([] { parse_nfa("0 a 1\n"); }) == 1);
    CHECK(parse_error_line([] { parse_nfa("states 2\nalphabet a\nstart 0\n"); }) == 0);
    CHECK(parse_error_line([] { parse_nfa("states 99999999999999999999\n"); }) == 1);
    CHECK(parse_error_line([] { parse_nfa("states 2\nalphabet a\nstart 0\nfinal 1\n0 a 1\n0 a 1\n"); }) == 6);
    CHECK(parse_error_line([] { parse_nfa("states 2\nalphabet a\nstart 0\nfinal 1\n0 a 1\nfinal 0\n"); }) == 6);
}

TEST_CASE("nfa round trip on random automata") {
    Rng rng(123);
    for (int trial = 0; trial < 100; ++trial) {
        const Nfa nfa = random_nfa(1 + rng() % 15, trial % 2 ? "ab" : "xyz!", 0.1, rng);
        const std::string text = format_nfa(nfa);
        CHECK(parse_nfa(text) == nfa);
        CHECK(format_nfa(parse_nfa(text)) == text);
    }
}

TEST_CASE("parse_graph") {
    const Graph g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(parse_graph(format_graph(g)) == g);
    CHECK(parse_graph("2 0\n").edge_count() == 0);

    CHECK(parse_error_line([] { parse_graph("3 1\n1 1\n"); }) == 2);
    CHECK(parse_error_line([] { parse_graph("3 2\n0 1\n1 0\n"); }) == 3);
    CHECK(parse_error_line([] { parse_graph("3 1\n0 3\n"); }) == 2);
    CHECK(parse_error_line([] { parse_graph("3 2\n0 1\n"); }) == 0);
    CHECK(parse_error_line([] { parse_graph("3 1\n0 1\n1 2\n"); }) == 3);
    CHECK(parse_error_line([] { parse_graph("0 0\n"); }) == 1);
    CHECK(parse_error_line([] { parse_graph(""); }) == 0);
}

TEST_CASE("parse_ov") {
    const OvInstance inst = parse_ov("2 3\nv 101\nv 000\nw 111\nw 010\n");
    CHECK(inst.n() == 2);
    CHECK(inst.d() == 3);
    CHECK(inst.v()[0] == BitVector{true, false, true});
    CHECK(inst.w()[1] == BitVector{false, true, false});
    CHECK(parse_ov(format_ov(inst)) == inst);

    CHECK(parse_error_line([] { parse_ov("1 2\nv 1\nw 11\n"); }) == 2);
    CHECK(parse_error_line([] { parse_ov("1 2\nv 12\nw 11\n"); }) == 2);
    CHECK(parse_error_line([] { parse_ov("1 2\nw 11\nv 11\n"); }) == 2);
    CHECK(parse_error_line([] { parse_ov("2 2\nv 11\nw 11\n"); }) == 0);
    CHECK(parse_error_line([] { parse_ov("0 2\n"); }) == 1);
}
