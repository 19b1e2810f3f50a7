#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "nfalen/automata.hpp"
#include "nfalen/reduce.hpp"

namespace nfalen {

/*
 * Line-oriented text formats. Blank lines and lines starting with '#' are
 * ignored everywhere. Parse failures throw ParseError carrying the 1-based
 * line number.
 *
 * NFA:
 *     states <n>
 *     alphabet <sym> <sym> ...
 *     start <id>
 *     final <id> ...
 *     <from> <sym> <to>        (one per transition, after the four headers)
 *
 * Graph:
 *     <n> <m>
 *     <u> <v>                  (m lines, u != v)
 *
 * Orthogonal vectors:
 *     <n> <d>
 *     v <bits>                 (n lines, exactly d characters of 0/1)
 *     w <bits>                 (n lines)
 */

Nfa parse_nfa(std::string_view text);
Graph parse_graph(std::string_view text);
OvInstance parse_ov(std::string_view text);

/// Canonical form: headers in the order above, transitions sorted by (from, symbol, to).
std::string format_nfa(const Nfa& nfa);
std::string format_graph(const Graph& graph);
std::string format_ov(const OvInstance& instance);

/// Reads a whole file. Throws Error if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace nfalen
