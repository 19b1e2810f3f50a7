#include "commands.hpp"

#include <charconv>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bench.hpp"
#include "nfalen/accept.hpp"
#include "nfalen/automata.hpp"
#include "nfalen/enumerate.hpp"
#include "nfalen/error.hpp"
#include "nfalen/reduce.hpp"
#include "nfalen/text_format.hpp"

namespace nfalen::cli {

namespace {

constexpr std::uint64_t max_length = std::uint64_t{1} << 63;

const char* flag(bool b) { return b ? "true" : "false"; }

int cmd_validate(const std::string& path, std::ostream& out) {
    const Nfa nfa = parse_nfa(read_file(path));
    const ValidationReport report = validate(nfa);
    out << "initially_connected: " << flag(report.initially_connected) << '\n'
        << "coaccessible: " << flag(report.coaccessible) << '\n'
        << "acyclic: " << flag(report.acyclic) << '\n'
        << "unary: " << flag(report.unary) << '\n';
    return report.all() ? positive : negative;
}

int cmd_accept_length(const std::string& path, const std::string& length_text, std::ostream& out,
                      std::ostream& err) {
    std::uint64_t length = 0;
    const auto [end, ec] = std::from_chars(length_text.data(), length_text.data() + length_text.size(), length);
    if (ec != std::errc{} || end != length_text.data() + length_text.size() || length > max_length) {
        err << "error: length must be a decimal integer in [0, 2^63], got '" << length_text << "'\n";
        return input_error;
    }
    const Nfa nfa = parse_nfa(read_file(path));
    const bool accepted = accepts_length(nfa, length);
    out << (accepted ? "ACCEPT" : "REJECT") << '\n';
    return accepted ? positive : negative;
}

int cmd_enumerate(const std::string& path, const std::string& engine, std::ostream& out, std::ostream& err) {
    const Nfa nfa = parse_nfa(read_file(path));
    LengthSet lengths;
    try {
        lengths = engine == "naive" ? enumerate_naive(nfa) : enumerate_fast(nfa);
    } catch (const NotUnary& e) {
        err << "error: " << e.what() << '\n';
        return negative;
    } catch (const NotAcyclic& e) {
        err << "error: " << e.what() << '\n';
        return negative;
    }
    for (std::uint64_t length : lengths.lengths) out << length << '\n';
    return positive;
}

int cmd_simulate(const std::string& path, const std::string& word, std::ostream& out) {
    const Nfa nfa = parse_nfa(read_file(path));
    const bool accepted = simulate(nfa, word);
    out << (accepted ? "ACCEPT" : "REJECT") << '\n';
    return accepted ? positive : negative;
}

int cmd_reduce_triangle(const std::string& graph_path, const std::string& out_path, std::ostream& out) {
    const Graph graph = parse_graph(read_file(graph_path));
    const TriangleReduction reduction = reduce_triangle(graph);
    write_file(out_path, format_nfa(reduction.nfa));
    out << "target_length " << reduction.target_length << '\n';
    return positive;
}

int cmd_reduce_ov(const std::string& ov_path, const std::string& out_path, std::ostream& out) {
    const OvInstance instance = parse_ov(read_file(ov_path));
    const OvReduction reduction = reduce_ov(instance);
    write_file(out_path, format_nfa(reduction.nfa));
    out << reduction.input << '\n';
    return positive;
}

int cmd_triangle_check(const std::string& graph_path, const std::string& engine, std::ostream& out) {
    const Graph graph = parse_graph(read_file(graph_path));
    bool found = false;
    if (engine == "brute") {
        found = has_triangle_brute(graph);
    } else if (engine == "matmul") {
        found = has_triangle_matmul(graph);
    } else {
        const TriangleReduction reduction = reduce_triangle(graph);
        found = accepts_length(reduction.nfa, reduction.target_length);
    }
    out << (found ? "TRIANGLE" : "TRIANGLE-FREE") << '\n';
    return found ? positive : negative;
}

int cmd_bench(const BenchOptions& options, std::ostream& out) {
    const auto rows = run_bench(options);
    out << format_bench(options, rows);
    for (const BenchRow& row : rows) {
        if (!row.agreement) return negative;
    }
    return positive;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Length acceptance, enumeration and reductions for nondeterministic finite automata", "nfalen"};
    app.require_subcommand(1);

    std::function<int()> action;
    std::string path, second, engine;
    BenchOptions bench;

    auto* validate_cmd = app.add_subcommand("validate", "Report structural properties of an NFA file");
    validate_cmd->add_option("nfa", path, "NFA file")->required();
    validate_cmd->callback([&] { action = [&] { return cmd_validate(path, out); }; });

    auto* accept_cmd = app.add_subcommand("accept-length", "Does the NFA accept some word of the given length?");
    accept_cmd->add_option("nfa", path, "NFA file")->required();
    accept_cmd->add_option("length", second, "word length, at most 2^63")->required();
    accept_cmd->callback([&] { action = [&] { return cmd_accept_length(path, second, out, err); }; });

    auto* enumerate_cmd = app.add_subcommand("enumerate", "List accepted lengths of a unary acyclic NFA");
    enumerate_cmd->add_option("nfa", path, "NFA file")->required();
    enumerate_cmd->add_option("--engine", engine, "naive or fast")
        ->default_val("fast")
        ->check(CLI::IsMember({"naive", "fast"}));
    enumerate_cmd->callback([&] { action = [&] { return cmd_enumerate(path, engine, out, err); }; });

    auto* simulate_cmd = app.add_subcommand("simulate", "Run the NFA on one word (omit the word for the empty word)");
    simulate_cmd->add_option("nfa", path, "NFA file")->required();
    simulate_cmd->add_option("word", second, "input word");
    simulate_cmd->callback([&] { action = [&] { return cmd_simulate(path, second, out); }; });

    auto* reduce_tri_cmd = app.add_subcommand("reduce-triangle", "Build the unary NFA for a graph");
    reduce_tri_cmd->add_option("graph", path, "graph file")->required();
    reduce_tri_cmd->add_option("out", second, "output NFA file")->required();
    reduce_tri_cmd->callback([&] { action = [&] { return cmd_reduce_triangle(path, second, out); }; });

    auto* reduce_ov_cmd = app.add_subcommand("reduce-ov", "Build the NFA and input word for an orthogonal vectors instance");
    reduce_ov_cmd->add_option("ov", path, "orthogonal vectors file")->required();
    reduce_ov_cmd->add_option("out", second, "output NFA file")->required();
    reduce_ov_cmd->callback([&] { action = [&] { return cmd_reduce_ov(path, second, out); }; });

    auto* tri_cmd = app.add_subcommand("triangle-check", "Decide whether a graph contains a triangle");
    tri_cmd->add_option("graph", path, "graph file")->required();
    tri_cmd->add_option("--engine", engine, "brute, matmul or reduction")
        ->default_val("matmul")
        ->check(CLI::IsMember({"brute", "matmul", "reduction"}));
    tri_cmd->callback([&] { action = [&] { return cmd_triangle_check(path, engine, out); }; });

    auto* bench_cmd = app.add_subcommand("bench", "Time naive against matrix-power enumeration on random DAGs");
    bench_cmd->add_option("--sizes", bench.sizes, "comma-separated state counts")
        ->delimiter(',')
        ->required()
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--seed", bench.seed, "base seed")->default_val(1);
    bench_cmd->add_option("--trials", bench.trials, "instances per size")->default_val(1)->check(CLI::PositiveNumber);
    bench_cmd->add_option("--repetitions", bench.repetitions, "timed runs per engine, median reported (min 3)")
        ->default_val(3);
    bench_cmd->callback([&] { action = [&] { return cmd_bench(bench, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return input_error;
    }

    try {
        return action();
    } catch (const ParseError& e) {
        err << path << ": " << e.what() << '\n';
        return input_error;
    } catch (const SymbolNotInAlphabet& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
}

}  // namespace nfalen::cli
