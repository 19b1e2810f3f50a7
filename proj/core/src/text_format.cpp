#include "nfalen/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "nfalen/error.hpp"

namespace nfalen {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits into whitespace-separated tokens, dropping blank and comment lines.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view raw = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++number;

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && is_space(raw[i])) ++i;
            const std::size_t begin = i;
            while (i < raw.size() && !is_space(raw[i])) ++i;
            if (i > begin) line.tokens.push_back(raw.substr(begin, i - begin));
        }
        if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

std::uint64_t to_number(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError(line, "number '" + std::string(token) + "' is too large");
    if (ec != std::errc{} || end != token.data() + token.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
    }
    return value;
}

std::size_t to_index(std::string_view token, std::size_t line, std::size_t bound, const char* what) {
    const std::uint64_t value = to_number(token, line);
    if (value >= bound) {
        throw ParseError(line, std::string(what) + " " + std::string(token) + " out of range (must be < "
                                   + std::to_string(bound) + ")");
    }
    return static_cast<std::size_t>(value);
}

void expect_arity(const Line& line, std::size_t count, const char* what) {
    if (line.tokens.size() != count) {
        throw ParseError(line.number, std::string(what) + " expects " + std::to_string(count - 1) + " argument(s)");
    }
}

Symbol to_symbol(std::string_view token, std::size_t line) {
    if (token.size() != 1 || !is_valid_symbol(token.front())) {
        throw ParseError(line, "symbol must be a single printable character, got '" + std::string(token) + "'");
    }
    return token.front();
}

BitVector to_bits(std::string_view token, std::size_t d, std::size_t line) {
    if (token.size() != d) {
        throw ParseError(line, "bit string must have exactly " + std::to_string(d) + " characters");
    }
    BitVector bits(d);
    for (std::size_t k = 0; k < d; ++k) {
        if (token[k] != '0' && token[k] != '1') throw ParseError(line, "bit string may only contain 0 and 1");
        bits[k] = token[k] == '1';
    }
    return bits;
}

// Library invariant violations surface as parse errors at the offending line.
template <typename F>
auto rethrow_at(std::size_t line, F&& build) {
    try {
        return build();
    } catch (const InvalidInput& e) {
        throw ParseError(line, e.what());
    }
}

}  // namespace

Nfa parse_nfa(std::string_view text) {
    const auto lines = tokenize(text);
    std::optional<std::size_t> states;
    std::optional<std::string> alphabet;
    std::optional<StateId> start;
    std::optional<std::vector<StateId>> finals;
    std::vector<Transition> transitions;
    std::vector<std::size_t> transition_lines;
    std::size_t last_line = 0;

    for (const Line& line : lines) {
        last_line = line.number;
        const std::string_view head = line.tokens.front();
        const bool header_done = states && alphabet && start && finals;
        const auto once = [&](bool seen) {
            if (seen) throw ParseError(line.number, "duplicate '" + std::string(head) + "' line");
            if (!transitions.empty()) throw ParseError(line.number, "header lines must precede transitions");
        };

        if (head == "states") {
            once(states.has_value());
            expect_arity(line, 2, "states");
            const std::uint64_t n = to_number(line.tokens[1], line.number);
            if (n == 0) throw ParseError(line.number, "state count must be at least 1");
            if (n > 0xFFFFFFFFULL) throw ParseError(line.number, "state count too large");
            states = static_cast<std::size_t>(n);
        } else if (head == "alphabet") {
            once(alphabet.has_value());
            std::string symbols;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                const Symbol s = to_symbol(line.tokens[i], line.number);
                if (symbols.find(s) != std::string::npos) throw ParseError(line.number, "duplicate alphabet symbol");
                symbols += s;
            }
            alphabet = std::move(symbols);
        } else if (head == "start") {
            once(start.has_value());
            if (!states) throw ParseError(line.number, "'states' must come before 'start'");
            expect_arity(line, 2, "start");
            start = static_cast<StateId>(to_index(line.tokens[1], line.number, *states, "state"));
        } else if (head == "final") {
            once(finals.has_value());
            if (!states) throw ParseError(line.number, "'states' must come before 'final'");
            std::vector<StateId> ids;
            for (std::size_t i = 1; i < line.tokens.size(); ++i) {
                ids.push_back(static_cast<StateId>(to_index(line.tokens[i], line.number, *states, "state")));
            }
            finals = std::move(ids);
        } else {
            if (!header_done) {
                throw ParseError(line.number, "expected a header line (states, alphabet, start, final), got '"
                                                  + std::string(head) + "'");
            }
            if (line.tokens.size() != 3) throw ParseError(line.number, "transition must be '<from> <symbol> <to>'");
            const auto from = static_cast<StateId>(to_index(line.tokens[0], line.number, *states, "state"));
            const Symbol sym = to_symbol(line.tokens[1], line.number);
            const auto to = static_cast<StateId>(to_index(line.tokens[2], line.number, *states, "state"));
            if (alphabet->find(sym) == std::string::npos) {
                throw ParseError(line.number, "symbol '" + std::string(1, sym) + "' is not in the alphabet");
            }
            transitions.push_back({from, sym, to});
            transition_lines.push_back(line.number);
        }
    }

    if (!states) throw ParseError(0, "missing 'states' line");
    if (!alphabet) throw ParseError(0, "missing 'alphabet' line");
    if (!start) throw ParseError(0, "missing 'start' line");
    if (!finals) throw ParseError(0, "missing 'final' line");

    std::vector<std::size_t> order(transitions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(transitions[a], transition_lines[a]) < std::tie(transitions[b], transition_lines[b]);
    });
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (transitions[order[i]] == transitions[order[i - 1]]) {
            throw ParseError(transition_lines[order[i]], "duplicate transition");
        }
    }

    return rethrow_at(last_line, [&] {
        return Nfa(*states, std::move(*alphabet), *start, std::move(*finals), std::move(transitions));
    });
}

Graph parse_graph(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty graph file");
    const Line& header = lines.front();
    expect_arity(header, 2, "graph header");
    const std::uint64_t n = to_number(header.tokens[0], header.number);
    const std::uint64_t m = to_number(header.tokens[1], header.number);
    if (n == 0) throw ParseError(header.number, "vertex count must be at least 1");
    if (lines.size() - 1 != m) {
        throw ParseError(lines.size() > m + 1 ? lines[m + 1].number : 0,
                         "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
    }

    std::vector<Graph::Edge> edges;
    edges.reserve(m);
    std::vector<std::pair<Graph::Edge, std::size_t>> seen;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens.size() != 2) throw ParseError(line.number, "edge must be '<u> <v>'");
        const std::size_t u = to_index(line.tokens[0], line.number, n, "vertex");
        const std::size_t v = to_index(line.tokens[1], line.number, n, "vertex");
        if (u == v) throw ParseError(line.number, "self-loop at vertex " + std::to_string(u));
        edges.emplace_back(u, v);
        seen.push_back({{std::min(u, v), std::max(u, v)}, line.number});
    }
    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
        if (seen[i].first == seen[i - 1].first) {
            throw ParseError(std::max(seen[i].second, seen[i - 1].second), "duplicate edge");
        }
    }
    return Graph(static_cast<std::size_t>(n), std::move(edges));
}

OvInstance parse_ov(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(0, "empty orthogonal vectors file");
    const Line& header = lines.front();
    expect_arity(header, 2, "header");
    const std::uint64_t n = to_number(header.tokens[0], header.number);
    const std::uint64_t d = to_number(header.tokens[1], header.number);
    if (n == 0 || d == 0) throw ParseError(header.number, "n and d must both be at least 1");
    if (lines.size() - 1 != 2 * n) {
        throw ParseError(0, "expected " + std::to_string(2 * n) + " vector lines, found "
                                + std::to_string(lines.size() - 1));
    }

    std::vector<BitVector> v, w;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        const char* tag = i <= n ? "v" : "w";
        if (line.tokens.size() != 2 || line.tokens[0] != tag) {
            throw ParseError(line.number, std::string("expected '") + tag + " <bits>'");
        }
        (i <= n ? v : w).push_back(to_bits(line.tokens[1], static_cast<std::size_t>(d), line.number));
    }
    return OvInstance(std::move(v), std::move(w));
}

std::string format_nfa(const Nfa& nfa) {
    std::ostringstream out;
    out << "states " << nfa.state_count() << '\n';
    out << "alphabet";
    for (Symbol s : nfa.alphabet()) out << ' ' << s;
    out << '\n';
    out << "start " << nfa.start() << '\n';
    out << "final";
    for (StateId f : nfa.finals()) out << ' ' << f;
    out << '\n';
    for (const Transition& t : nfa.transitions()) out << t.from << ' ' << t.symbol << ' ' << t.to << '\n';
    return out.str();
}

std::string format_graph(const Graph& graph) {
    std::ostringstream out;
    out << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
    for (const auto& [u, v] : graph.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string format_ov(const OvInstance& instance) {
    std::ostringstream out;
    out << instance.n() << ' ' << instance.d() << '\n';
    const auto emit = [&out](char tag, const BitVector& bits) {
        out << tag << ' ';
        for (bool b : bits) out << (b ? '1' : '0');
        out << '\n';
    };
    for (const BitVector& v : instance.v()) emit('v', v);
    for (const BitVector& w : instance.w()) emit('w', w);
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + path + "'");
    out << contents;
    if (!out) throw Error("failed writing '" + path + "'");
}

}  // namespace nfalen
