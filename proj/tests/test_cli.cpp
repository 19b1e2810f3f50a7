#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "nfalen/text_format.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "nfalen");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = nfalen::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(NFALEN_TEST_DATA) + "/" + name; }

std::string temp(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("nfalen_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("validate") {
    const Result ok = run({"validate", data("chain4.nfa")});
    CHECK(ok.status == 0);
    CHECK(ok.out == "initially_connected: true\ncoaccessible: true\nacyclic: true\nunary: true\n");

    const Result cyclic = run({"validate", data("cyclic.nfa")});
    CHECK(cyclic.status == 1);
    CHECK(cyclic.out.find("acyclic: false\n") != std::string::npos);

    const Result bad = run({"validate", data("out_of_range.nfa")});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("line 5") != std::string::npos);

    CHECK(run({"validate", data("does_not_exist.nfa")}).status == 2);
}

TEST_CASE("accept-length") {
    CHECK(run({"accept-length", data("selfloop.nfa"), "1000000"}).out == "ACCEPT\n");
    CHECK(run({"accept-length", data("selfloop.nfa"), "9223372036854775808"}).status == 0);
    CHECK(run({"accept-length", data("selfloop.nfa"), "9223372036854775809"}).status == 2);
    CHECK(run({"accept-length", data("selfloop.nfa"), "-1"}).status == 2);
    CHECK(run({"accept-length", data("selfloop.nfa"), "12x"}).status == 2);

    const std::string square = temp("c4.nfa");
    REQUIRE(run({"reduce-triangle", data("c4.graph"), square}).status == 0);
    const Result reject = run({"accept-length", square, "6"});
    CHECK(reject.status == 1);
    CHECK(reject.out == "REJECT\n");

    const std::string tri = temp("k3.nfa");
    REQUIRE(run({"reduce-triangle", data("k3.graph"), tri}).status == 0);
    CHECK(run({"accept-length", tri, "5"}).out == "ACCEPT\n");
}

TEST_CASE("enumerate") {
    CHECK(run({"enumerate", data("single.nfa")}).out == "0\n");
    for (const char* engine : {"naive", "fast"}) {
        const Result r = run({"enumerate", "--engine", engine, data("chain4.nfa")});
        CHECK(r.status == 0);
        CHECK(r.out == "1\n3\n");
    }
    const Result cyclic = run({"enumerate", data("cyclic.nfa")});
    CHECK(cyclic.status == 1);
    CHECK_FALSE(cyclic.err.empty());
    CHECK(run({"enumerate", data("binary.nfa")}).status == 1);
    CHECK(run({"enumerate", "--engine", "quantum", data("chain4.nfa")}).status == 2);

    const std::string square = temp("c4_enum.nfa");
    REQUIRE(run({"reduce-triangle", data("c4.graph"), square}).status == 0);
    CHECK(run({"enumerate", "--engine", "naive", square}).out == "3\n5\n7\n9\n");
    CHECK(run({"enumerate", "--engine", "fast", square}).out == "3\n5\n7\n9\n");
}

TEST_CASE("simulate") {
    CHECK(run({"simulate", data("single.nfa")}).out == "ACCEPT\n");
    CHECK(run({"simulate", data("chain4.nfa"), "a"}).status == 0);
    CHECK(run({"simulate", data("chain4.nfa"), "aa"}).status == 1);
    CHECK(run({"simulate", data("binary.nfa"), "bb"}).status == 0);
    const Result bad = run({"simulate", data("binary.nfa"), "abc"});
    CHECK(bad.status == 2);
    CHECK(bad.err.find("'c'") != std::string::npos);
}

TEST_CASE("reduce-triangle") {
    const std::string out = temp("reduce.nfa");
    const Result c4 = run({"reduce-triangle", data("c4.graph"), out});
    CHECK(c4.status == 0);
    CHECK(c4.out == "target_length 6\n");
    CHECK(nfalen::read_file(out).rfind("states 16\n", 0) == 0);

    CHECK(run({"reduce-triangle", data("k3.graph"), out}).out == "target_length 5\n");
    CHECK(nfalen::parse_nfa(nfalen::read_file(out)).state_count() == 12);

    CHECK(run({"reduce-triangle", data("edgeless2.graph"), out}).out == "target_length 4\n");
    const nfalen::Nfa edgeless = nfalen::parse_nfa(nfalen::read_file(out));
    CHECK(edgeless.state_count() == 8);
    CHECK(edgeless.transitions().size() == 2);

    const Result loop = run({"reduce-triangle", data("selfloop.graph"), out});
    CHECK(loop.status == 2);
    CHECK(loop.err.find("line 2") != std::string::npos);
}

TEST_CASE("reduce-ov") {
    const std::string out = temp("ov.nfa");
    const Result yes = run({"reduce-ov", data("ov_accept.ov"), out});
    CHECK(yes.out == "000\n");
    CHECK(run({"simulate", out, "000"}).out == "ACCEPT\n");

    const Result no = run({"reduce-ov", data("ov_reject.ov"), out});
    CHECK(no.out == "001\n");
    CHECK(run({"simulate", out, "001"}).out == "REJECT\n");

    // v = (1,0,0,1) is orthogonal to w = (0,1,1,0)
    const Result gadget = run({"reduce-ov", data("ov_gadget.ov"), out});
    CHECK(gadget.out == "001000000110\n");
    CHECK(run({"simulate", out, "001000000110"}).status == 0);
}

TEST_CASE("triangle-check") {
    for (const char* engine : {"brute", "matmul", "reduction"}) {
        CAPTURE(engine);
        const Result k3 = run({"triangle-check", "--engine", engine, data("k3.graph")});
        CHECK(k3.status == 0);
        CHECK(k3.out == "TRIANGLE\n");
        const Result c4 = run({"triangle-check", "--engine", engine, data("c4.graph")});
        CHECK(c4.status == 1);
        CHECK(c4.out == "TRIANGLE-FREE\n");
    }
}

TEST_CASE("bench") {
    const Result one = run({"bench", "--sizes", "8", "--trials", "1"});
    CHECK(one.status == 0);
    std::istringstream lines(one.out);
    std::string comment, header, row, extra;
    std::getline(lines, comment);
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(comment.rfind("# generator=forward-dag out_degree=2", 0) == 0);
    CHECK(header == "n,seed,naive_time,fast_time,multiplications_used,agreement");
    CHECK(row.rfind("8,1,", 0) == 0);
    CHECK(row.find(",3,true") != std::string::npos);
    CHECK_FALSE(std::getline(lines, extra));

    CHECK(run({"bench", "--sizes", "0"}).status == 2);
    CHECK(run({"bench"}).status == 2);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    CHECK(run({"validate"}).status == 2);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("identical inputs give byte-identical output") {
    const std::string first = temp("det1.nfa");
    const std::string second = temp("det2.nfa");
    const Result a = run({"reduce-ov", data("ov_gadget.ov"), first});
    const Result b = run({"reduce-ov", data("ov_gadget.ov"), second});
    CHECK(a.out == b.out);
    CHECK(nfalen::read_file(first) == nfalen::read_file(second));
    CHECK(run({"enumerate", first}).err == run({"enumerate", second}).err);
    CHECK(run({"validate", first}).out == run({"validate", second}).out);
}
