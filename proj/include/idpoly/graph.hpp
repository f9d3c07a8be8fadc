#ifndef IDPOLY_GRAPH_HPP
#define IDPOLY_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace idpoly {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the labels 0..n-1.
///
/// Adjacency is stored as one sorted neighbor list per vertex. Instances are
/// immutable once built; every constructor validates that the relation is
/// symmetric and irreflexive.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops and out-of-range labels throw.
    Graph(std::size_t n, const std::vector<Edge>& edges) : adj_(n)
    {
        for (auto [u, v] : edges) {
            if (u >= n || v >= n)
                throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has a label outside [0," + std::to_string(n) + ")");
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& nbrs : adj_) {
            std::sort(nbrs.begin(), nbrs.end());
            nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        }
    }

    std::size_t order() const noexcept { return adj_.size(); }

    std::size_t size() const noexcept
    {
        std::size_t total = 0;
        for (const auto& nbrs : adj_)
            total += nbrs.size();
        return total / 2;
    }

    const std::vector<Vertex>& neighbors(Vertex v) const
    {
        check(v);
        return adj_[v];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool has_edge(Vertex u, Vertex v) const
    {
        check(u);
        check(v);
        return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
    }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        for (Vertex u = 0; u < adj_.size(); ++u)
            for (Vertex v : adj_[u])
                if (u < v)
                    out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check(Vertex v) const
    {
        if (v >= adj_.size())
            throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order " +
                                    std::to_string(adj_.size()));
    }

    std::vector<std::vector<Vertex>> adj_;
};

inline Graph new_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

inline Graph empty_graph(std::size_t n) { return Graph(n, {}); }

inline Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges);
}

inline Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v)
        edges.emplace_back(v - 1, v);
    return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw std::invalid_argument("cycle requires at least 3 vertices");
    auto edges = path_graph(n).edges();
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

/// Vertex-disjoint union; the second graph's labels are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    auto edges = g.edges();
    const auto shift = g.order();
    for (auto [u, v] : h.edges())
        edges.emplace_back(u + shift, v + shift);
    return Graph(g.order() + h.order(), edges);
}

}  // namespace idpoly

#endif  // IDPOLY_GRAPH_HPP
