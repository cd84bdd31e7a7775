#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

// Decodes one graph6 token (n <= 64). Tolerates a leading ">>graph6<<"
// header. Rejects sparse6 (':'), incremental sparse6 (';') and digraph6
// ('&') inputs, bad characters, wrong length and nonzero padding bits.
Graph decode_graph6(std::string_view text);

// Canonical-length graph6 encoding; decode_graph6(encode_graph6(g)) == g and
// encode_graph6(decode_graph6(s)) == s for canonical-length s.
std::string encode_graph6(const Graph& g);

// One graph per line; blank lines and a ">>graph6<<" header line are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

} // namespace cospec
