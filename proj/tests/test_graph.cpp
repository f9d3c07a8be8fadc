#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include <idpoly/family_graphs.hpp>
#include <idpoly/graph.hpp>
#include <idpoly/graph_io.hpp>
#include <idpoly/operators.hpp>

#include "test_support.hpp"

using namespace idpoly;

namespace {

// Frozen with networkx.to_graph6_bytes, an independent encoder.
constexpr const char* path70_graph6 = "~?@EhCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_?????????G?????????@??????????C??????????G??????????G??????????C??????????@???????????G";

void expect_simple(const Graph& g)
{
    for (Vertex u = 0; u < g.order(); ++u) {
        EXPECT_FALSE(g.has_edge(u, u));
        for (Vertex v : g.neighbors(u)) {
            EXPECT_LT(v, g.order());
            EXPECT_TRUE(g.has_edge(v, u));
        }
    }
}

}  // namespace

TEST(Graph, BuildsFromEdgeList)
{
    const Graph p3 = new_graph(3, {{0, 1}, {1, 2}});
    EXPECT_EQ(p3, path_graph(3));
    EXPECT_EQ(p3.size(), 2u);

    const Graph k1 = new_graph(1, {});
    EXPECT_EQ(k1.order(), 1u);
    EXPECT_EQ(k1.size(), 0u);

    const Graph claw = new_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_EQ(claw, star_graph(3));
}

TEST(Graph, DeduplicatesAndRejectsBadEdges)
{
    EXPECT_EQ(new_graph(2, {{0, 1}, {1, 0}, {0, 1}}).size(), 1u);
    EXPECT_THROW(new_graph(3, {{0, 3}}), std::out_of_range);
    EXPECT_THROW(new_graph(3, {{1, 1}}), std::invalid_argument);
}

TEST(Graph6, DecodesKnownStrings)
{
    EXPECT_EQ(from_graph6("A_"), complete_graph(2));
    EXPECT_EQ(from_graph6("C~"), complete_graph(4));
    EXPECT_EQ(from_graph6("@"), empty_graph(1));
    EXPECT_EQ(from_graph6("?"), Graph{});
    EXPECT_EQ(from_graph6(">>graph6<<Ch\n"), path_graph(4));
}

TEST(Graph6, EncodesLikeNetworkx)
{
    EXPECT_EQ(to_graph6(path_graph(4)), "Ch");
    EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
    EXPECT_EQ(to_graph6(star_graph(3)), "Cs");
    EXPECT_EQ(to_graph6(path_graph(70)), path70_graph6);
    EXPECT_EQ(from_graph6(path70_graph6), path_graph(70));
    EXPECT_EQ(to_graph6(complete_graph(63)).substr(0, 4), "~??~");
}

TEST(Graph6, RejectsMalformedInput)
{
    EXPECT_THROW(from_graph6(""), parse_error);
    EXPECT_THROW(from_graph6("C"), parse_error);        // missing data byte
    EXPECT_THROW(from_graph6("A__"), parse_error);      // extra byte
    EXPECT_THROW(from_graph6("A "), parse_error);       // below printable range
    EXPECT_THROW(from_graph6("A\x7f"), parse_error);    // above printable range
    EXPECT_THROW(from_graph6("A@"), parse_error);       // nonzero padding
    EXPECT_THROW(from_graph6("~~??????"), parse_error); // 8-byte header
}

TEST(Graph6, RoundTripsRandomGraphs)
{
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        const Graph g = test_util::random_graph_between(rng, 0, 20);
        EXPECT_EQ(from_graph6(to_graph6(g)), g);
    }
}

TEST(EdgeList, ParsesCommentsAndBlankLines)
{
    const Graph g = parse_edge_list("# a path\n4\n\n0 1  # first\n1 2\n2 3\n");
    EXPECT_EQ(g, path_graph(4));
    EXPECT_EQ(parse_edge_list(to_edge_list(cycle_graph(6))), cycle_graph(6));
}

TEST(EdgeList, RejectsLoopsDuplicatesAndGarbage)
{
    EXPECT_THROW(parse_edge_list("3\n1 1\n"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0 1\n1 0\n"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0 3\n"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0 x\n"), parse_error);
    EXPECT_THROW(parse_edge_list("3\n0 1 2\n"), parse_error);
    EXPECT_THROW(parse_edge_list("# nothing\n"), parse_error);
    EXPECT_THROW(parse_edge_list("-3\n"), parse_error);
}

TEST(Operators, Complement)
{
    EXPECT_EQ(complement(complete_graph(3)), empty_graph(3));
    EXPECT_EQ(complement(path_graph(3)), new_graph(3, {{0, 2}}));
    EXPECT_EQ(complement(empty_graph(5)), complete_graph(5));
}

TEST(Operators, LineGraph)
{
    EXPECT_EQ(line_graph(path_graph(4)), path_graph(3));
    EXPECT_EQ(line_graph(complete_graph(3)), complete_graph(3));
    EXPECT_EQ(line_graph(star_graph(3)), complete_graph(3));
}

TEST(Operators, ClawFree)
{
    EXPECT_FALSE(is_claw_free(star_graph(3)));
    for (std::size_t n = 1; n <= 10; ++n)
        EXPECT_TRUE(is_claw_free(path_graph(n)));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i)
        EXPECT_TRUE(is_claw_free(line_graph(test_util::random_graph_between(rng, 1, 8))));
}

TEST(Operators, Join)
{
    EXPECT_EQ(join(complete_graph(1), complete_graph(1)), complete_graph(2));
    EXPECT_TRUE(test_util::isomorphic(join(empty_graph(2), empty_graph(2)), cycle_graph(4)));
    const Graph wheel = join(complete_graph(1), cycle_graph(4));
    EXPECT_EQ(wheel.order(), 5u);
    EXPECT_EQ(wheel.size(), 8u);
    EXPECT_EQ(wheel.degree(0), 4u);
}

TEST(Operators, Lexicographic)
{
    EXPECT_EQ(lexicographic(complete_graph(2), complete_graph(2)), complete_graph(4));
    const Graph h = path_graph(3);
    EXPECT_EQ(lexicographic(empty_graph(2), h), disjoint_union(h, h));
    EXPECT_EQ(lexicographic(path_graph(2), empty_graph(2)), complete_multipartite_graph({2, 2}));
    EXPECT_THROW(lexicographic(path_graph(2), Graph{}), std::invalid_argument);
}

TEST(Operators, CoronaAndCompound)
{
    EXPECT_TRUE(test_util::isomorphic(corona(path_graph(2), complete_graph(1)), path_graph(4)));
    EXPECT_EQ(corona(complete_graph(1), path_graph(3)), join(complete_graph(1), path_graph(3)));

    // 3-sunlet: triangle with a pendant at each vertex.
    const Graph sunlet = corona(cycle_graph(3), complete_graph(1));
    EXPECT_EQ(sunlet, new_graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}}));

    const Graph k2 = complete_graph(2);
    EXPECT_EQ(compound(k2, CliqueCover::make(k2, {{0, 1}}), complete_graph(1)), complete_graph(3));

    // H_4 of the clique cover construction: P_4 with two isolated vertices on each pair.
    const Graph p4 = path_graph(4);
    const Graph h4 = compound(p4, CliqueCover::make(p4, {{0, 1}, {2, 3}}), empty_graph(2));
    EXPECT_EQ(h4, new_graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5},
                                {2, 6}, {2, 7}, {3, 6}, {3, 7}}));
    EXPECT_EQ(h4, h_graph(4));
}

TEST(Operators, CompoundWithSingletonCoverIsCorona)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 30; ++i) {
        const Graph g = test_util::random_graph_between(rng, 1, 7);
        const Graph h = test_util::random_graph_between(rng, 1, 3);
        EXPECT_EQ(compound(g, singleton_cover(g), h), corona(g, h));
    }
}

TEST(Operators, Expansion)
{
    std::mt19937_64 rng(5);
    const Graph g = test_util::random_graph_between(rng, 1, 7);
    EXPECT_EQ(expansion(g, 1), g);
    EXPECT_EQ(expansion(complete_graph(2), 2), complete_graph(4));
    EXPECT_EQ(expansion(path_graph(3), 2).order(), 6u);
    EXPECT_THROW(expansion(g, 0), std::invalid_argument);
}

TEST(CliqueCover, Validation)
{
    const Graph p4 = path_graph(4);
    EXPECT_NO_THROW(CliqueCover::make(p4, {{0, 1}, {2, 3}}));
    EXPECT_THROW(CliqueCover::make(p4, {{0, 2}, {1, 3}}), std::invalid_argument);   // not cliques
    EXPECT_THROW(CliqueCover::make(p4, {{0, 1}, {1, 2}, {3}}), std::invalid_argument); // overlap
    EXPECT_THROW(CliqueCover::make(p4, {{0, 1}, {2}}), std::invalid_argument);       // vertex 3 missing
    EXPECT_THROW(CliqueCover::make(p4, {{0, 1}, {}, {2, 3}}), std::invalid_argument);
    EXPECT_THROW(CliqueCover::make(p4, {{0, 1}, {2, 3, 4}}), std::invalid_argument);
    const auto cover = CliqueCover::make(p4, {{0, 1}, {2, 3}});
    EXPECT_THROW(compound(path_graph(5), cover, complete_graph(1)), std::invalid_argument);
}

TEST(CliqueCover, Greedy)
{
    EXPECT_EQ(greedy_clique_cover(complete_graph(3)).blocks(), (std::vector<std::vector<Vertex>>{{0, 1, 2}}));
    EXPECT_EQ(greedy_clique_cover(empty_graph(3)).blocks(), (std::vector<std::vector<Vertex>>{{0}, {1}, {2}}));
    EXPECT_EQ(greedy_clique_cover(path_graph(4)).blocks(), (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));

    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        const Graph g = test_util::random_graph_between(rng, 0, 12);
        const auto cover = greedy_clique_cover(g);
        EXPECT_NO_THROW(CliqueCover::validate(g, cover.blocks()));
    }
}

TEST(Operators, PreserveSimplicity)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        const Graph g = test_util::random_graph_between(rng, 1, 6);
        const Graph h = test_util::random_graph_between(rng, 1, 4);
        expect_simple(complement(g));
        EXPECT_EQ(complement(complement(g)), g);
        expect_simple(line_graph(g));
        expect_simple(join(g, h));
        expect_simple(lexicographic(g, h));
        expect_simple(corona(g, h));
        expect_simple(compound(g, greedy_clique_cover(g), h));
        expect_simple(expansion(g, 3));
        EXPECT_EQ(lexicographic(g, h).order(), g.order() * h.order());
        EXPECT_EQ(compound(g, greedy_clique_cover(g), h).order(),
                  g.order() + greedy_clique_cover(g).size() * h.order());
    }
}

TEST(FamilyGraphs, Book)
{
    // u1 = 0, u2 = 1; pages (v1,w1) = (2,3), (v2,w2) = (4,5).
    EXPECT_EQ(book_graph(2), new_graph(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {4, 5}}));
    for (std::size_t n = 1; n <= 5; ++n)
        EXPECT_EQ(generalized_book_graph(n, 4), book_graph(n));
}

TEST(FamilyGraphs, Friendship)
{
    EXPECT_EQ(friendship_graph(2), new_graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}}));
    for (std::size_t n = 1; n <= 5; ++n)
        EXPECT_EQ(generalized_friendship_graph(3, n), friendship_graph(n));
    const Graph f43 = generalized_friendship_graph(4, 3);
    EXPECT_EQ(f43.order(), 10u);
    EXPECT_EQ(f43.size(), 12u);
    EXPECT_EQ(f43.degree(0), 6u);
}

TEST(FamilyGraphs, GeneralizedBookFollowsTheLiteralEdgeSet)
{
    // m = 3: the lone spine vertex meets both ends of every page (a friendship graph).
    EXPECT_EQ(generalized_book_graph(3, 3), friendship_graph(3));
    const Graph b25 = generalized_book_graph(2, 5);
    EXPECT_EQ(b25, new_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {2, 4}, {0, 5}, {5, 6}, {2, 6}}));
}

TEST(FamilyGraphs, KPath)
{
    const Graph g = k_path_graph(3, 7);
    EXPECT_EQ(g.order(), 7u);
    // 3 clique edges + 3 for each of the 4 later vertices.
    EXPECT_EQ(g.size(), 15u);
    EXPECT_TRUE(g.has_edge(6, 3));
    EXPECT_FALSE(g.has_edge(6, 2));
    EXPECT_EQ(k_path_graph(1, 5), path_graph(5));
    EXPECT_EQ(k_path_graph(4, 4), complete_graph(4));
    EXPECT_TRUE(is_claw_free(g));
    EXPECT_THROW(k_path_graph(0, 3), std::invalid_argument);
    EXPECT_THROW(k_path_graph(4, 3), std::invalid_argument);
}

TEST(FamilyGraphs, HGraphCovers)
{
    EXPECT_EQ(h_graph_cover(4).blocks(), (std::vector<std::vector<Vertex>>{{0, 1}, {2, 3}}));
    EXPECT_EQ(h_graph_cover(5).blocks(), (std::vector<std::vector<Vertex>>{{0}, {1, 2}, {3, 4}}));
    EXPECT_EQ(h_graph(0), Graph{});
    EXPECT_EQ(h_graph(5).order(), 5u + 3u * 2u);
}

TEST(FamilyGraphs, SpecDispatchAndDomains)
{
    EXPECT_EQ(family_graph({Family::path, {5}}), path_graph(5));
    EXPECT_EQ(family_graph({Family::complete_multipartite, {2, 1, 1}}), complete_multipartite_graph({2, 1, 1}));
    EXPECT_EQ(family_graph({Family::generalized_friendship, {4, 2}}), generalized_friendship_graph(4, 2));
    EXPECT_EQ(family_graph({Family::star, {5}}), star_graph(5));
    EXPECT_THROW(family_graph({Family::path, {0}}), std::invalid_argument);
    EXPECT_THROW(family_graph({Family::cycle, {2}}), std::invalid_argument);
    EXPECT_THROW(family_graph({Family::generalized_book, {2, 2}}), std::invalid_argument);
    EXPECT_THROW(family_graph({Family::generalized_friendship, {2, 2}}), std::invalid_argument);
    EXPECT_THROW(family_graph({Family::book, {0}}), std::invalid_argument);
    EXPECT_THROW(family_graph({Family::path, {1, 2}}), std::invalid_argument);
    EXPECT_EQ(family_from_string("h_graph"), Family::h_graph);
    EXPECT_EQ(family_from_string("nope"), std::nullopt);
}
