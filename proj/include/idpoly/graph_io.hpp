#ifndef IDPOLY_GRAPH_IO_HPP
#define IDPOLY_GRAPH_IO_HPP

#include <cstddef>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace idpoly {

/// Malformed textual input (graph6, edge lists, cover files, coefficient lists).
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr std::size_t graph6_short_max = 62;
inline constexpr std::size_t graph6_medium_max = 258047;

inline void check_graph6_char(char c, std::size_t pos)
{
    if (c < 63 || c > 126)
        throw parse_error("graph6: byte " + std::to_string(static_cast<int>(static_cast<unsigned char>(c))) +
                          " at offset " + std::to_string(pos) + " is outside the printable range 63..126");
}

// Strips an optional ">>graph6<<" header and trailing line terminators.
inline std::string_view graph6_body(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header)
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);
    return text;
}

}  // namespace detail

/// Decodes a graph6 string. Orders up to 258047 (the 4-byte header form) are
/// accepted; the 8-byte "~~" header is rejected.
inline Graph from_graph6(std::string_view text)
{
    text = detail::graph6_body(text);
    if (text.empty())
        throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    std::size_t n = 0;
    if (text[0] != '~') {
        detail::check_graph6_char(text[0], 0);
        n = static_cast<std::size_t>(text[0] - 63);
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == '~')
            throw parse_error("graph6: 8-byte order header (n > 258047) is not supported");
        if (text.size() < 4)
            throw parse_error("graph6: truncated order header");
        for (std::size_t i = 1; i < 4; ++i) {
            detail::check_graph6_char(text[i], i);
            n = (n << 6) | static_cast<std::size_t>(text[i] - 63);
        }
        pos = 4;
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t expected = (bits + 5) / 6;
    if (text.size() - pos != expected)
        throw parse_error("graph6: expected " + std::to_string(expected) + " data bytes for n=" +
                          std::to_string(n) + ", found " + std::to_string(text.size() - pos));

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const char c = text[pos + k / 6];
            detail::check_graph6_char(c, pos + k / 6);
            const int group = c - 63;
            if ((group >> (5 - static_cast<int>(k % 6))) & 1)
                edges.emplace_back(i, j);
        }
    }
    for (std::size_t b = pos; b < text.size(); ++b)
        detail::check_graph6_char(text[b], b);
    // Padding bits must be zero.
    if (bits % 6 != 0) {
        const int group = text.back() - 63;
        const int pad = static_cast<int>(6 - bits % 6);
        if (group & ((1 << pad) - 1))
            throw parse_error("graph6: nonzero padding bits");
    }
    return Graph(n, edges);
}

inline std::string to_graph6(const Graph& g)
{
    const std::size_t n = g.order();
    std::string out;
    if (n <= detail::graph6_short_max) {
        out.push_back(static_cast<char>(63 + n));
    } else if (n <= detail::graph6_medium_max) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(63 + ((n >> shift) & 0x3f)));
    } else {
        throw std::length_error("graph6: order " + std::to_string(n) + " exceeds 258047");
    }

    int group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + group));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(63 + (group << (6 - filled))));
    return out;
}

namespace detail {

// Splits a stream into non-blank, comment-stripped lines with 1-based numbers.
inline std::vector<std::pair<std::size_t, std::string>> content_lines(std::istream& in)
{
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        lines.emplace_back(number, line);
    }
    return lines;
}

inline std::size_t parse_label(const std::string& token, std::size_t line)
{
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
        if (token.empty() || token[0] == '-' || token[0] == '+')
            throw std::invalid_argument(token);
        value = std::stoull(token, &used);
    } catch (const std::exception&) {
        throw parse_error("line " + std::to_string(line) + ": '" + token + "' is not a vertex label");
    }
    if (used != token.size())
        throw parse_error("line " + std::to_string(line) + ": '" + token + "' is not a vertex label");
    return static_cast<std::size_t>(value);
}

}  // namespace detail

/// Reads the edge-list format: first content line is the order n, then one
/// "u v" pair per line. Blank lines and '#' comments are ignored. Self-loops
/// and duplicate edges are errors here (unlike the Graph constructor).
inline Graph read_edge_list(std::istream& in)
{
    const auto lines = detail::content_lines(in);
    if (lines.empty())
        throw parse_error("edge list: missing vertex count");

    std::istringstream head(lines.front().second);
    std::string token, extra;
    head >> token;
    if (head >> extra)
        throw parse_error("line " + std::to_string(lines.front().first) + ": expected a single vertex count");
    const std::size_t n = detail::parse_label(token, lines.front().first);

    std::vector<Edge> edges;
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& [number, text] = lines[i];
        std::istringstream row(text);
        std::string a, b;
        if (!(row >> a >> b) || (row >> extra))
            throw parse_error("line " + std::to_string(number) + ": expected 'u v'");
        const auto u = detail::parse_label(a, number);
        const auto v = detail::parse_label(b, number);
        if (u >= n || v >= n)
            throw parse_error("line " + std::to_string(number) + ": label out of range [0," + std::to_string(n) + ")");
        if (u == v)
            throw parse_error("line " + std::to_string(number) + ": self-loop at " + std::to_string(u));
        if (seen[u][v])
            throw parse_error("line " + std::to_string(number) + ": duplicate edge " + a + " " + b);
        seen[u][v] = seen[v][u] = true;
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

inline Graph parse_edge_list(const std::string& text)
{
    std::istringstream in(text);
    return read_edge_list(in);
}

inline std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

/// Reads a clique-cover file: one block per line, space-separated labels.
/// Only the syntax is checked here; validate against a graph with
/// CliqueCover::make.
inline std::vector<std::vector<Vertex>> read_cover_blocks(std::istream& in)
{
    std::vector<std::vector<Vertex>> blocks;
    for (const auto& [number, text] : detail::content_lines(in)) {
        std::istringstream row(text);
        std::vector<Vertex> block;
        std::string token;
        while (row >> token)
            block.push_back(detail::parse_label(token, number));
        blocks.push_back(std::move(block));
    }
    return blocks;
}

}  // namespace idpoly

#endif  // IDPOLY_GRAPH_IO_HPP
