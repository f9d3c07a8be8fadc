#ifndef IDPOLY_FAMILY_GRAPHS_HPP
#define IDPOLY_FAMILY_GRAPHS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "operators.hpp"

namespace idpoly {

enum class Family {
    path,
    cycle,
    complete,
    empty,
    star,
    complete_multipartite,
    k_path,
    book,
    generalized_book,
    friendship,
    generalized_friendship,
    h_graph,
};

struct FamilySpec {
    Family family;
    /// Family parameters in the order documented on each constructor;
    /// complete_multipartite takes its part sizes.
    std::vector<std::size_t> params;

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline constexpr std::array<std::pair<Family, std::string_view>, 12> family_names{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::empty, "empty"},
    {Family::star, "star"},
    {Family::complete_multipartite, "complete_multipartite"},
    {Family::k_path, "k_path"},
    {Family::book, "book"},
    {Family::generalized_book, "generalized_book"},
    {Family::friendship, "friendship"},
    {Family::generalized_friendship, "generalized_friendship"},
    {Family::h_graph, "h_graph"},
}};

inline std::string_view to_string(Family f)
{
    for (auto [tag, name] : family_names)
        if (tag == f)
            return name;
    return "unknown";
}

inline std::optional<Family> family_from_string(std::string_view name)
{
    for (auto [tag, text] : family_names)
        if (text == name)
            return tag;
    return std::nullopt;
}

namespace detail {

[[noreturn]] inline void bad_family_params(std::string_view family, const std::string& why)
{
    throw std::invalid_argument(std::string(family) + ": " + why);
}

}  // namespace detail

/// K_{1,n}, hub 0.
inline Graph star_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= n; ++v)
        edges.emplace_back(0, v);
    return Graph(n + 1, edges);
}

/// Complete multipartite graph; parts are consecutive label ranges.
inline Graph complete_multipartite_graph(const std::vector<std::size_t>& parts)
{
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (parts[p] == 0)
            detail::bad_family_params("complete_multipartite", "every part needs at least one vertex");
        part_of.insert(part_of.end(), parts[p], p);
    }
    std::vector<Edge> edges;
    for (Vertex u = 0; u < part_of.size(); ++u)
        for (Vertex v = u + 1; v < part_of.size(); ++v)
            if (part_of[u] != part_of[v])
                edges.emplace_back(u, v);
    return Graph(part_of.size(), edges);
}

/// (k,n)-path: a k-clique on 0..k-1, then vertex i is adjacent to i-1..i-k.
inline Graph k_path_graph(std::size_t k, std::size_t n)
{
    if (k < 1 || k > n)
        detail::bad_family_params("k_path", "requires 1 <= k <= n");
    std::vector<Edge> edges;
    for (Vertex i = 1; i < n; ++i)
        for (Vertex j = (i >= k ? i - k : 0); j < i; ++j)
            edges.emplace_back(j, i);
    return Graph(n, edges);
}

/// Generalized book B_{n,m}: spine u_1..u_{m-2} (labels 0..m-3) followed by
/// pages v_i, w_i (labels m-2+2(i-1), m-1+2(i-1)). Edges follow the literal
/// definition: spine path, u_1 v_i, v_i w_i, and u_{m-2} w_i. For m = 3 the
/// single spine vertex meets both ends of every page.
inline Graph generalized_book_graph(std::size_t n, std::size_t m)
{
    if (n < 1 || m < 3)
        detail::bad_family_params("generalized_book", "requires n >= 1 and m >= 3");
    const std::size_t spine = m - 2;
    std::vector<Edge> edges;
    for (Vertex u = 1; u < spine; ++u)
        edges.emplace_back(u - 1, u);
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex v = spine + 2 * i;
        const Vertex w = v + 1;
        edges.emplace_back(0, v);
        edges.emplace_back(v, w);
        edges.emplace_back(spine - 1, w);
    }
    return Graph(spine + 2 * n, edges);
}

/// Book B_n: u_1 = 0, u_2 = 1, pages v_i = 2i, w_i = 2i+1 (i from 1).
/// Same labeling as generalized_book_graph(n, 4).
inline Graph book_graph(std::size_t n)
{
    if (n < 1)
        detail::bad_family_params("book", "requires n >= 1");
    return generalized_book_graph(n, 4);
}

/// Flower F_{q,n}: n cycles of length q sharing vertex 0. Cycle i uses the
/// labels 1+i(q-1) .. (i+1)(q-1) as a path whose ends attach to 0.
inline Graph generalized_friendship_graph(std::size_t q, std::size_t n)
{
    if (q < 3 || n < 1)
        detail::bad_family_params("generalized_friendship", "requires q >= 3 and n >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) {
        const Vertex first = 1 + i * (q - 1);
        const Vertex last = first + q - 2;
        edges.emplace_back(0, first);
        edges.emplace_back(0, last);
        for (Vertex v = first + 1; v <= last; ++v)
            edges.emplace_back(v - 1, v);
    }
    return Graph(1 + n * (q - 1), edges);
}

/// Friendship graph F_n: n triangles sharing vertex 0.
inline Graph friendship_graph(std::size_t n)
{
    if (n < 1)
        detail::bad_family_params("friendship", "requires n >= 1");
    return generalized_friendship_graph(3, n);
}

/// Cover of P_n used by the H_n construction: pairs {0,1},{2,3},... for even
/// n, and {0},{1,2},{3,4},... for odd n.
inline CliqueCover h_graph_cover(std::size_t n)
{
    const Graph p = path_graph(n);
    std::vector<std::vector<Vertex>> blocks;
    Vertex start = 0;
    if (n % 2 == 1) {
        blocks.push_back({0});
        start = 1;
    }
    for (Vertex v = start; v + 1 < n; v += 2)
        blocks.push_back({v, v + 1});
    return CliqueCover::make(p, std::move(blocks));
}

/// H_n: compound of P_n with two isolated vertices per cover block. H_0 is
/// the null graph.
inline Graph h_graph(std::size_t n)
{
    if (n == 0)
        return Graph{};
    return compound(path_graph(n), h_graph_cover(n), empty_graph(2));
}

inline Graph family_graph(const FamilySpec& spec)
{
    const auto& p = spec.params;
    const auto name = to_string(spec.family);
    auto want = [&](std::size_t count) {
        if (p.size() != count)
            detail::bad_family_params(name, "expects " + std::to_string(count) + " parameter(s), got " +
                                                std::to_string(p.size()));
    };
    switch (spec.family) {
    case Family::path:
        want(1);
        if (p[0] < 1)
            detail::bad_family_params(name, "requires n >= 1");
        return path_graph(p[0]);
    case Family::cycle:
        want(1);
        if (p[0] < 3)
            detail::bad_family_params(name, "requires n >= 3");
        return cycle_graph(p[0]);
    case Family::complete:
        want(1);
        if (p[0] < 1)
            detail::bad_family_params(name, "requires n >= 1");
        return complete_graph(p[0]);
    case Family::empty:
        want(1);
        return empty_graph(p[0]);
    case Family::star:
        want(1);
        if (p[0] < 1)
            detail::bad_family_params(name, "requires n >= 1");
        return star_graph(p[0]);
    case Family::complete_multipartite:
        if (p.empty())
            detail::bad_family_params(name, "needs at least one part");
        return complete_multipartite_graph(p);
    case Family::k_path:
        want(2);
        return k_path_graph(p[0], p[1]);
    case Family::book:
        want(1);
        return book_graph(p[0]);
    case Family::generalized_book:
        want(2);
        return generalized_book_graph(p[0], p[1]);
    case Family::friendship:
        want(1);
        return friendship_graph(p[0]);
    case Family::generalized_friendship:
        want(2);
        return generalized_friendship_graph(p[0], p[1]);
    case Family::h_graph:
        want(1);
        return h_graph(p[0]);
    }
    detail::bad_family_params(name, "unknown family");
}

}  // namespace idpoly

#endif  // IDPOLY_FAMILY_GRAPHS_HPP
