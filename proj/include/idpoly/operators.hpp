#ifndef IDPOLY_OPERATORS_HPP
#define IDPOLY_OPERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace idpoly {

inline Graph complement(const Graph& g)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v))
                edges.emplace_back(u, v);
    return Graph(g.order(), edges);
}

/// One vertex per edge of g, numbered in the order of g.edges().
inline Graph line_graph(const Graph& g)
{
    const auto es = g.edges();
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            const auto [p, q] = es[a];
            const auto [r, s] = es[b];
            if (p == r || p == s || q == r || q == s)
                edges.emplace_back(a, b);
        }
    return Graph(es.size(), edges);
}

/// True iff no vertex has three pairwise non-adjacent neighbors.
inline bool is_claw_free(const Graph& g)
{
    for (Vertex c = 0; c < g.order(); ++c) {
        const auto& nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.has_edge(nb[i], nb[j]))
                    continue;
                for (std::size_t k = j + 1; k < nb.size(); ++k)
                    if (!g.has_edge(nb[i], nb[k]) && !g.has_edge(nb[j], nb[k]))
                        return false;
            }
    }
    return true;
}

/// g1 + g2: disjoint union plus every edge between the two sides.
/// Labels of g2 are shifted by g1.order().
inline Graph join(const Graph& g1, const Graph& g2)
{
    auto edges = disjoint_union(g1, g2).edges();
    for (Vertex u = 0; u < g1.order(); ++u)
        for (Vertex v = 0; v < g2.order(); ++v)
            edges.emplace_back(u, g1.order() + v);
    return Graph(g1.order() + g2.order(), edges);
}

/// Lexicographic product g[h]. Vertex (a, x) gets label a * h.order() + x;
/// (a, x) ~ (b, y) iff a ~ b in g, or a == b and x ~ y in h.
inline Graph lexicographic(const Graph& g, const Graph& h)
{
    const std::size_t m = h.order();
    if (m == 0)
        throw std::invalid_argument("lexicographic product needs a nonempty second factor");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < g.order(); ++a) {
        for (auto [x, y] : h.edges())
            edges.emplace_back(a * m + x, a * m + y);
        for (Vertex b : g.neighbors(a)) {
            if (b < a)
                continue;
            for (Vertex x = 0; x < m; ++x)
                for (Vertex y = 0; y < m; ++y)
                    edges.emplace_back(a * m + x, b * m + y);
        }
    }
    return Graph(g.order() * m, edges);
}

/// Replaces every vertex by a copy of K_r; identical to lexicographic(g, K_r).
inline Graph expansion(const Graph& g, std::size_t r)
{
    if (r == 0)
        throw std::invalid_argument("expansion factor must be at least 1");
    return lexicographic(g, complete_graph(r));
}

/// A partition of V(G) into cliques, validated against the graph it was made for.
class CliqueCover {
public:
    /// Throws std::invalid_argument unless the blocks are nonempty, pairwise
    /// disjoint, cover every vertex of g and each induce a complete subgraph.
    static CliqueCover make(const Graph& g, std::vector<std::vector<Vertex>> blocks)
    {
        validate(g, blocks);
        for (auto& b : blocks)
            std::sort(b.begin(), b.end());
        CliqueCover cover;
        cover.blocks_ = std::move(blocks);
        return cover;
    }

    static void validate(const Graph& g, const std::vector<std::vector<Vertex>>& blocks)
    {
        std::vector<bool> covered(g.order(), false);
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            const auto& block = blocks[i];
            if (block.empty())
                throw std::invalid_argument("clique cover: block " + std::to_string(i) + " is empty");
            for (Vertex v : block) {
                if (v >= g.order())
                    throw std::invalid_argument("clique cover: vertex " + std::to_string(v) + " out of range");
                if (covered[v])
                    throw std::invalid_argument("clique cover: vertex " + std::to_string(v) +
                                                " appears in more than one block");
                covered[v] = true;
            }
            for (std::size_t a = 0; a < block.size(); ++a)
                for (std::size_t b = a + 1; b < block.size(); ++b)
                    if (!g.has_edge(block[a], block[b]))
                        throw std::invalid_argument("clique cover: block " + std::to_string(i) +
                                                    " is not a clique (" + std::to_string(block[a]) + "," +
                                                    std::to_string(block[b]) + " non-adjacent)");
        }
        for (Vertex v = 0; v < g.order(); ++v)
            if (!covered[v])
                throw std::invalid_argument("clique cover: vertex " + std::to_string(v) + " is not covered");
    }

    const std::vector<std::vector<Vertex>>& blocks() const noexcept { return blocks_; }
    std::size_t size() const noexcept { return blocks_.size(); }

    friend bool operator==(const CliqueCover&, const CliqueCover&) = default;

private:
    std::vector<std::vector<Vertex>> blocks_;
};

inline CliqueCover singleton_cover(const Graph& g)
{
    std::vector<std::vector<Vertex>> blocks;
    for (Vertex v = 0; v < g.order(); ++v)
        blocks.push_back({v});
    return CliqueCover::make(g, std::move(blocks));
}

/// Grows a clique from the smallest uncovered label, each time adding the
/// smallest uncovered label adjacent to every current member.
inline CliqueCover greedy_clique_cover(const Graph& g)
{
    std::vector<bool> covered(g.order(), false);
    std::vector<std::vector<Vertex>> blocks;
    for (Vertex seed = 0; seed < g.order(); ++seed) {
        if (covered[seed])
            continue;
        std::vector<Vertex> block{seed};
        covered[seed] = true;
        for (Vertex v = seed + 1; v < g.order(); ++v) {
            if (covered[v])
                continue;
            const bool fits = std::all_of(block.begin(), block.end(), [&](Vertex u) { return g.has_edge(u, v); });
            if (fits) {
                block.push_back(v);
                covered[v] = true;
            }
        }
        blocks.push_back(std::move(block));
    }
    return CliqueCover::make(g, std::move(blocks));
}

/// Compound graph: for each cover block, a private copy of h joined to every
/// vertex of the block. Labels: g's vertices first, then the copies of h in
/// block order (copy i occupies g.order() + i*h.order() ...).
inline Graph compound(const Graph& g, const CliqueCover& cover, const Graph& h)
{
    CliqueCover::validate(g, cover.blocks());
    if (h.order() == 0)
        throw std::invalid_argument("compound graph needs a nonempty attached graph");
    auto edges = g.edges();
    const std::size_t m = h.order();
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const std::size_t base = g.order() + i * m;
        for (auto [x, y] : h.edges())
            edges.emplace_back(base + x, base + y);
        for (Vertex v : cover.blocks()[i])
            for (Vertex x = 0; x < m; ++x)
                edges.emplace_back(v, base + x);
    }
    return Graph(g.order() + cover.size() * m, edges);
}

/// Corona g o h; the compound graph over the singleton cover.
inline Graph corona(const Graph& g, const Graph& h) { return compound(g, singleton_cover(g), h); }

}  // namespace idpoly

#endif  // IDPOLY_OPERATORS_HPP
