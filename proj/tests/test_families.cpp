#include <random>

#include <gtest/gtest.h>

#include <idpoly/enumeration.hpp>
#include <idpoly/families.hpp>
#include <idpoly/family_graphs.hpp>
#include <idpoly/operators.hpp>
#include <idpoly/roots.hpp>
#include <idpoly/shape.hpp>

#include "test_support.hpp"

using namespace idpoly;

TEST(Path, InitialValuesAndRecurrence)
{
    EXPECT_EQ(di_path(0), IntPoly::constant(1));
    EXPECT_EQ(di_path(-3), IntPoly::constant(1));
    EXPECT_EQ(di_path(1), (IntPoly{0, 1}));
    EXPECT_EQ(di_path(2), (IntPoly{0, 2}));
    EXPECT_EQ(di_path(3), (IntPoly{0, 1, 1}));
    EXPECT_EQ(di_path(6), (IntPoly{0, 0, 1, 4}));
    EXPECT_EQ(di_path(8), (IntPoly{0, 0, 0, 4, 5}));
    EXPECT_EQ(evaluate(di_path(8), Rational(-1)), Rational(1));
}

TEST(Path, MatchesEnumerationAndBinomialForm)
{
    for (long n = 1; n <= 22; ++n) {
        const auto d = di_path(n);
        EXPECT_EQ(d, di_path_binomial(n)) << n;
        if (n <= 18) {
            EXPECT_EQ(d, di_polynomial(path_graph(static_cast<std::size_t>(n)))) << n;
        }
    }
    for (long n = 23; n <= 200; n += 17)
        EXPECT_EQ(di_path(n), di_path_binomial(n)) << n;
}

TEST(Path, BinomialCounts)
{
    EXPECT_EQ(di_path_count(2, 2), 3);
    EXPECT_EQ(di_path_count(2, 4), 1);
    EXPECT_EQ(di_path_count(2, 6), 0);
    EXPECT_EQ(di_path_count(3, 0), 0);
    EXPECT_THROW(di_path_count(0, 1), std::invalid_argument);
    for (long k = 1; k <= 6; ++k)
        for (long t = 0; t <= 2 * k; ++t)
            EXPECT_EQ(di_path_count(k, t), di_path(k + t)[static_cast<std::size_t>(k)]) << k << "," << t;
}

TEST(Path, GeneratingFunctionSlices)
{
    EXPECT_EQ(path_gf_slice(1), (IntPoly{0, 1, 2, 1}));
    EXPECT_EQ(path_gf_slice(2), (IntPoly{0, 0, 0, 1, 3, 3, 1}));
    EXPECT_EQ(path_gf_slice(3), pow(IntPoly{1, 1}, 4).shifted(5));
    EXPECT_THROW(path_gf_slice(0), std::invalid_argument);
    for (long k = 1; k <= 5; ++k) {
        const auto slice = path_gf_slice(k);
        for (long n = 1; n <= 14; ++n)
            EXPECT_EQ(slice[static_cast<std::size_t>(n)],
                      di_polynomial(path_graph(static_cast<std::size_t>(n)))[static_cast<std::size_t>(k)]);
    }
}

TEST(Path, MinimumCardinality)
{
    EXPECT_EQ(min_card_path_count(6), (MinCardinality{2, 1}));
    EXPECT_EQ(min_card_path_count(7), (MinCardinality{3, 6}));
    EXPECT_EQ(min_card_path_count(8), (MinCardinality{3, 4}));
    for (long n = 1; n <= 40; ++n)
        EXPECT_EQ(min_card_path_count(n), min_card_path_formula(n)) << n;
    EXPECT_THROW(min_card_path_formula(0), std::invalid_argument);
}

TEST(Path, IndependentDominationNumberIsCeilThird)
{
    // The ceil(n/2) reading does not survive P_3; enumeration gives ceil(n/3).
    for (std::size_t n = 1; n <= 16; ++n)
        EXPECT_EQ(gamma_i(path_graph(n)), (n + 2) / 3) << n;
    EXPECT_NE(gamma_i(path_graph(3)), 2u);
}

TEST(Book, FormulaAndOracle)
{
    EXPECT_EQ(di_book(2), (IntPoly{0, 0, 2, 2}));
    EXPECT_EQ(di_book(3), (IntPoly{0, 0, 0, 6, 2}));
    EXPECT_THROW(di_book(1), std::invalid_argument);
    EXPECT_EQ(di_polynomial(book_graph(1)), (IntPoly{0, 0, 2}));  // C_4
    for (long n = 2; n <= 7; ++n) {
        EXPECT_EQ(di_book(n), di_polynomial(book_graph(static_cast<std::size_t>(n)))) << n;
        EXPECT_TRUE(is_real_rooted(di_book(n)));
    }
}

TEST(GeneralizedBook, ValidDomain)
{
    EXPECT_EQ(di_generalized_book(2, 6), (IntPoly{0, 0, 1, 6, 2}));
    EXPECT_EQ(di_generalized_book(2, 5), (IntPoly{0, 0, 1, 6}));
    for (long n = 2; n <= 4; ++n)
        for (long m = 5; m <= 9; ++m)
            EXPECT_EQ(di_generalized_book(n, m),
                      di_polynomial(generalized_book_graph(static_cast<std::size_t>(n), static_cast<std::size_t>(m))))
                << n << "," << m;
}

TEST(GeneralizedBook, ShortSpinesMiscount)
{
    EXPECT_THROW(di_generalized_book(2, 4), std::invalid_argument);
    EXPECT_THROW(di_generalized_book(2, 3), std::invalid_argument);
    EXPECT_THROW(di_generalized_book(1, 6), std::invalid_argument);
    EXPECT_EQ(di_generalized_book_paper(2, 4), (IntPoly{0, 0, 3, 4}));
    EXPECT_EQ(di_polynomial(generalized_book_graph(2, 4)), (IntPoly{0, 0, 2, 2}));
    EXPECT_EQ(di_polynomial(generalized_book_graph(2, 3)), (IntPoly{0, 1, 4}));
    for (long n = 2; n <= 4; ++n)
        for (long m = 3; m <= 4; ++m)
            EXPECT_NE(di_generalized_book_paper(n, m),
                      di_polynomial(generalized_book_graph(static_cast<std::size_t>(n), static_cast<std::size_t>(m))));
}

TEST(GeneralizedBook, GraphShape)
{
    EXPECT_EQ(generalized_book_graph(3, 4), book_graph(3));
    EXPECT_EQ(generalized_book_graph(3, 3), friendship_graph(3));
    const Graph b = generalized_book_graph(2, 6);
    EXPECT_EQ(b.order(), 8u);
    EXPECT_EQ(b.size(), 3u + 2u * 3u);
}

TEST(Friendship, FormulaAndOracle)
{
    EXPECT_EQ(di_friendship(1), (IntPoly{0, 3}));
    EXPECT_EQ(di_friendship(2), (IntPoly{0, 1, 4}));
    EXPECT_EQ(di_friendship(3), (IntPoly{0, 1, 0, 8}));
    for (long n = 1; n <= 6; ++n) {
        const auto d = di_friendship(n);
        EXPECT_EQ(d, di_polynomial(friendship_graph(static_cast<std::size_t>(n))));
        EXPECT_EQ(is_real_rooted(d), n <= 2) << n;
    }
}

TEST(GeneralizedFriendship, PublishedExpression)
{
    EXPECT_EQ(di_generalized_friendship_paper(4, 2), (IntPoly{0, 0, 0, 3, 2}));
    EXPECT_EQ(di_generalized_friendship_paper(5, 2), (IntPoly{0, 0, 0, 4, 12}));
    EXPECT_EQ(di_generalized_friendship_paper(3, 2), di_friendship(2));
    EXPECT_NE(di_generalized_friendship_paper(4, 2), di_polynomial(generalized_friendship_graph(4, 2)));
}

TEST(GeneralizedFriendship, EndpointFreePaths)
{
    EXPECT_EQ(endpoint_free_path_ids_poly(0), IntPoly::constant(1));
    EXPECT_EQ(endpoint_free_path_ids_poly(1), IntPoly{});
    EXPECT_EQ(endpoint_free_path_ids_poly(2), IntPoly{});
    EXPECT_EQ(endpoint_free_path_ids_poly(3), (IntPoly{0, 1}));
    EXPECT_EQ(endpoint_free_path_ids_poly(4), IntPoly{});
    for (std::size_t n = 1; n <= 12; ++n) {
        std::vector<BigInt> counts(n + 1, 0);
        for (const auto& s : maximal_independent_sets(path_graph(n)))
            if (!s.contains(0) && !s.contains(n - 1))
                ++counts[s.size()];
        EXPECT_EQ(endpoint_free_path_ids_poly(static_cast<long>(n)), IntPoly(counts)) << n;
    }
}

TEST(GeneralizedFriendship, CorrectedFormula)
{
    EXPECT_EQ(di_generalized_friendship_corrected(4, 2), (IntPoly{0, 0, 0, 3, 1}));
    EXPECT_EQ(di_generalized_friendship_corrected(5, 2), (IntPoly{0, 0, 0, 4, 9}));
    for (long n = 1; n <= 5; ++n)
        EXPECT_EQ(di_generalized_friendship_corrected(3, n), di_friendship(n));
    for (long q = 3; q <= 7; ++q)
        for (long n = 1; n <= 3; ++n)
            EXPECT_EQ(di_generalized_friendship_corrected(q, n),
                      di_polynomial(generalized_friendship_graph(static_cast<std::size_t>(q), static_cast<std::size_t>(n))))
                << q << "," << n;
}

TEST(CompleteMultipartite, SpecialFamily)
{
    EXPECT_EQ(di_complete_multipartite_special(2, 2), (IntPoly{0, 2, 1}));
    EXPECT_EQ(di_complete_multipartite_special(2, 5), (IntPoly{0, 5, 1}));
    EXPECT_EQ(di_complete_multipartite_special(3, 1), (IntPoly{0, 0, 1, 1}));
    for (long m = 2; m <= 4; ++m)
        for (long n = 1; n <= 4; ++n)
            EXPECT_EQ(di_complete_multipartite_special(m, n), di_polynomial(complete_multipartite_special_graph(m, n)));
    EXPECT_THROW(di_complete_multipartite_special(1, 1), std::invalid_argument);
}

TEST(Constructions, AlternatingSum)
{
    EXPECT_EQ(construct_alternating_sum_graph(-3), complete_graph(3));
    EXPECT_EQ(construct_alternating_sum_graph(0), path_graph(3));
    for (long n = -5; n <= 5; ++n)
        EXPECT_EQ(evaluate(di_polynomial(construct_alternating_sum_graph(n)), Rational(-1)), Rational(n)) << n;
}

TEST(Constructions, IntegerRoot)
{
    EXPECT_THROW(construct_integer_root_graph(0), std::invalid_argument);
    EXPECT_TRUE(test_util::isomorphic(construct_integer_root_graph(1), path_graph(3)));
    for (long n = 1; n <= 10; ++n) {
        const auto d = di_polynomial(construct_integer_root_graph(n));
        EXPECT_EQ(d, (IntPoly{0, n, 1}));
        const auto roots = isolate_real_roots(d);
        ASSERT_EQ(roots.size(), 2u);
        EXPECT_EQ(roots[0].exact, Rational(-n));
    }
}

// Product identities, each checked against enumeration.

TEST(Products, JoinIsAdditive)
{
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; ++i) {
        const Graph a = test_util::random_graph_between(rng, 1, 8);
        const Graph b = test_util::random_graph_between(rng, 1, 8);
        EXPECT_EQ(di_polynomial(join(a, b)), di_polynomial(a) + di_polynomial(b));
    }
}

TEST(Products, LexicographicComposes)
{
    std::mt19937_64 rng(52);
    const std::vector<Graph> inner{complete_graph(1), complete_graph(2), empty_graph(2), path_graph(3),
                                   complete_graph(3)};
    for (int i = 0; i < 30; ++i) {
        const Graph g = test_util::random_graph_between(rng, 1, 6);
        for (const auto& h : inner)
            EXPECT_EQ(di_polynomial(lexicographic(g, h)), compose(di_polynomial(g), di_polynomial(h)));
    }
}

TEST(Products, CoronaAndCompound)
{
    std::mt19937_64 rng(53);
    const std::vector<Graph> leaves{complete_graph(1), empty_graph(2), complete_graph(2), path_graph(3)};
    for (int i = 0; i < 30; ++i) {
        const Graph g = test_util::random_graph_between(rng, 1, 6);
        for (const auto& h : leaves) {
            const auto combined = compound_combine(independence_polynomial(g), di_polynomial(h), g.order());
            EXPECT_EQ(combined, di_polynomial(corona(g, h)));
            const auto spare = g.order() - alpha(g);
            EXPECT_TRUE(divide_exact(combined, pow(di_polynomial(h), spare)).has_value());
        }
    }
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto cover = h_graph_cover(n);
        for (const auto& h : {empty_graph(2), complete_graph(2)}) {
            const Graph c = compound(path_graph(n), cover, h);
            const auto combined = compound_combine(independence_polynomial(path_graph(n)), di_polynomial(h), cover.size());
            EXPECT_EQ(combined, di_polynomial(c)) << n;
            EXPECT_TRUE(divide_exact(combined, pow(di_polynomial(h), cover.size() - alpha(path_graph(n)))).has_value());
        }
    }
}

TEST(Products, ExpansionScalesArgument)
{
    std::mt19937_64 rng(54);
    for (int i = 0; i < 40; ++i) {
        const Graph g = test_util::random_graph_between(rng, 1, 6);
        for (std::size_t r : {2u, 3u})
            EXPECT_EQ(di_polynomial(expansion(g, r)), scale_arg(di_polynomial(g), BigInt(r)));
    }
}

TEST(RealRootedness, CertifiedFamilies)
{
    for (long n = 2; n <= 8; ++n)
        EXPECT_TRUE(is_real_rooted(di_polynomial(book_graph(static_cast<std::size_t>(n)))));
    for (std::size_t n = 1; n <= 8; ++n)
        EXPECT_TRUE(is_real_rooted(di_polynomial(corona(path_graph(n), complete_graph(1)))));
    for (std::size_t n = 3; n <= 8; ++n)
        EXPECT_TRUE(is_real_rooted(di_polynomial(corona(cycle_graph(n), complete_graph(1)))));
    for (std::size_t n = 1; n <= 10; ++n)
        EXPECT_TRUE(is_real_rooted(di_polynomial(h_graph(n)))) << n;
}

TEST(RealRootedness, ClawFreeIndependencePolynomials)
{
    for (std::size_t n = 1; n <= 12; ++n) {
        EXPECT_TRUE(is_real_rooted(independence_polynomial(path_graph(n))));
        if (n >= 3) {
            EXPECT_TRUE(is_real_rooted(independence_polynomial(cycle_graph(n))));
        }
    }
    std::mt19937_64 rng(55);
    for (int i = 0; i < 50; ++i) {
        const Graph l = line_graph(test_util::random_graph_between(rng, 1, 7));
        ASSERT_TRUE(is_claw_free(l));
        EXPECT_TRUE(is_real_rooted(independence_polynomial(l)));
    }
}

TEST(WellCovered, IffMonomial)
{
    std::mt19937_64 rng(56);
    for (int i = 0; i < 100; ++i) {
        const Graph g = test_util::random_graph_between(rng, 1, 9);
        const auto d = di_polynomial(g);
        std::size_t terms = 0;
        for (const auto& c : d.coeffs())
            terms += c != 0;
        EXPECT_EQ(is_well_covered(g), terms == 1);
    }
}

TEST(Shape, PathsAreUnimodal)
{
    for (long n = 1; n <= 200; ++n)
        EXPECT_TRUE(is_unimodal(di_path(n))) << n;
}
