#include "cospec/graph6.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace cospec {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int edge_bit_count(int n) { return n * (n - 1) / 2; }

} // namespace

Graph decode_graph6(std::string_view text) {
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    if (text[0] == ':') throw std::invalid_argument("graph6: sparse6 input not supported");
    if (text[0] == ';') throw std::invalid_argument("graph6: incremental sparse6 input not supported");
    if (text[0] == '&') throw std::invalid_argument("graph6: digraph6 input not supported");

    for (char ch : text)
        if (ch < 63 || ch > 126) throw std::invalid_argument("graph6: character out of range");

    std::size_t pos = 0;
    long n;
    if (text[0] != '~') {
        n = text[0] - kBias;
        pos = 1;
    } else if (text.size() >= 2 && text[1] != '~') {
        if (text.size() < 4) throw std::invalid_argument("graph6: truncated order field");
        n = ((long{text[1]} - kBias) << 12) | ((long{text[2]} - kBias) << 6) | (long{text[3]} - kBias);
        pos = 4;
    } else {
        if (text.size() < 8) throw std::invalid_argument("graph6: truncated order field");
        n = 0;
        for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | (long{text[i]} - kBias);
        pos = 8;
    }
    if (n < 0) throw std::invalid_argument("graph6: malformed order field");
    if (n > Graph::kMaxVertices)
        throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds supported maximum 64");

    const int nn = static_cast<int>(n);
    const int bits = edge_bit_count(nn);
    const std::size_t expect = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expect)
        throw std::invalid_argument("graph6: body length mismatch (got " + std::to_string(text.size()) +
                                    " chars, expected " + std::to_string(expect) + ")");

    Graph g(nn);
    int k = 0;
    // Upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    int ci = 0, cj = 1;
    for (std::size_t at = pos; at < text.size(); ++at) {
        const int six = text[at] - kBias;
        for (int shift = 5; shift >= 0; --shift, ++k) {
            const bool bit = (six >> shift) & 1;
            if (k < bits) {
                if (bit) g.add_edge(ci, cj);
                if (++ci == cj) {
                    ci = 0;
                    ++cj;
                }
            } else if (bit) {
                throw std::invalid_argument("graph6: nonzero padding bits");
            }
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
        out.push_back(static_cast<char>((n & 63) + kBias));
    }
    int six = 0, filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            six = (six << 1) | (g.edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(six + kBias));
                six = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((six << (6 - filled)) + kBias));
    return out;
}

std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
        if (line.empty()) continue;
        if (line == kHeader) continue;
        graphs.push_back(decode_graph6(line));
    }
    return graphs;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph6 file: " + path);
    return read_graph6_lines(in);
}

} // namespace cospec
