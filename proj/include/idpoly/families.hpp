#ifndef IDPOLY_FAMILIES_HPP
#define IDPOLY_FAMILIES_HPP

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "family_graphs.hpp"
#include "graph.hpp"
#include "operators.hpp"
#include "polynomial.hpp"

namespace idpoly {

// Closed-form independent domination polynomials. Conventions:
// D_i(P_j) = 1 for every j <= 0, and all counts are exact.

inline BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (long i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return result;
}

/// D_i(P_n) from D_i(P_n) = x D_i(P_{n-2}) + x D_i(P_{n-3}) with
/// P_1 = x, P_2 = 2x, P_3 = x^2 + x.
inline IntPoly di_path(long n)
{
    if (n <= 0)
        return IntPoly::constant(1);
    std::vector<IntPoly> table{IntPoly::constant(1), IntPoly{0, 1}, IntPoly{0, 2}, IntPoly{0, 1, 1}};
    for (long j = 4; j <= n; ++j)
        table.push_back((table[static_cast<std::size_t>(j - 2)] + table[static_cast<std::size_t>(j - 3)]).shifted(1));
    return table[static_cast<std::size_t>(n)];
}

/// D_i(P_n) = sum_k C(k+1, n-2k+1) x^k, the binomial form of the same sequence.
inline IntPoly di_path_binomial(long n)
{
    if (n <= 0)
        return IntPoly::constant(1);
    std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (long k = 1; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = binomial(k + 1, n - 2 * k + 1);
    return IntPoly(std::move(c));
}

/// Number of independent dominating k-sets of P_{k+t}: C(k+1, t-k+1).
inline BigInt di_path_count(long k, long t)
{
    if (k < 1 || t < 0)
        throw std::invalid_argument("di_path_count requires k >= 1 and t >= 0");
    return binomial(k + 1, t - k + 1);
}

/// Coefficient of y^k in the bivariate generating function
/// x(1+x)^2 y / (1 - (x^2+x^3) y), i.e. x^(2k-1) (1+x)^(k+1).
/// Its x^n coefficient is d_i(P_n, k).
inline IntPoly path_gf_slice(long k)
{
    if (k < 1)
        throw std::invalid_argument("path_gf_slice requires k >= 1");
    return pow(IntPoly{1, 1}, static_cast<unsigned long>(k + 1)).shifted(static_cast<std::size_t>(2 * k - 1));
}

struct MinCardinality {
    long k_min;
    BigInt count;
    friend bool operator==(const MinCardinality&, const MinCardinality&) = default;
};

/// Smallest independent dominating set size of P_n and how many there are,
/// read off di_path(n).
inline MinCardinality min_card_path_count(long n)
{
    if (n < 1)
        throw std::invalid_argument("min_card_path_count requires n >= 1");
    const auto p = di_path(n);
    const auto k = p.valuation();
    return {k, p[static_cast<std::size_t>(k)]};
}

/// The three-case closed form: n = 3k -> (k, 1); n = 3k+1 -> (k+1, C(k+2, k));
/// n = 3k+2 -> (k+1, C(k+2, k+1)).
inline MinCardinality min_card_path_formula(long n)
{
    if (n < 1)
        throw std::invalid_argument("min_card_path_formula requires n >= 1");
    const long k = n / 3;
    switch (n % 3) {
    case 0:
        return {k, 1};
    case 1:
        return {k + 1, binomial(k + 2, k)};
    default:
        return {k + 1, binomial(k + 2, k + 1)};
    }
}

/// D_i(B_n) = (2^n - 2) x^n + 2 x^(n+1), n >= 2. The one-page book C_4 is
/// outside the stated domain, though the expression happens to fit it.
inline IntPoly di_book(long n)
{
    if (n < 2)
        throw std::invalid_argument("di_book requires n >= 2");
    const auto un = static_cast<std::size_t>(n);
    return IntPoly::monomial((BigInt(1) << un) - 2, un) + IntPoly::monomial(2, un + 1);
}

/// The generalized-book expression exactly as published, for any n >= 2, m >= 3:
/// (2^n-2) x^n P_{m-4} + 2 x^(n+1) P_{m-5} + (x^2 + 2x^(n+1)) P_{m-6},
/// with P_j = D_i(P_j). Disagrees with enumeration for m in {3, 4}.
inline IntPoly di_generalized_book_paper(long n, long m)
{
    if (n < 2 || m < 3)
        throw std::invalid_argument("generalized book expression requires n >= 2 and m >= 3");
    const auto un = static_cast<std::size_t>(n);
    const IntPoly pages = IntPoly::monomial((BigInt(1) << un) - 2, un);
    const IntPoly ends = IntPoly::monomial(2, un + 1);
    return pages * di_path(m - 4) + ends * di_path(m - 5) + (IntPoly::monomial(1, 2) + ends) * di_path(m - 6);
}

/// D_i(B_{n,m}) for n >= 2, m >= 5, where the published formula agrees with
/// enumeration. m = 3 and m = 4 are refused: the expression miscounts there.
inline IntPoly di_generalized_book(long n, long m)
{
    if (n < 2)
        throw std::invalid_argument("di_generalized_book requires n >= 2");
    if (m < 5)
        throw std::invalid_argument("di_generalized_book requires m >= 5: the closed form miscounts B_{n,3} "
                                    "and B_{n,4} (use verify to see the disagreement)");
    return di_generalized_book_paper(n, m);
}

/// The published min-of-max expression for the independent domination number
/// of B_{n,m}. Comparison only: it relies on gamma_i(P_n) = ceil(n/2), which
/// enumeration contradicts.
inline long gamma_i_generalized_book_paper(long n, long m)
{
    if (n < 2 || m < 3)
        throw std::invalid_argument("gamma_i_generalized_book_paper requires n >= 2 and m >= 3");
    auto ceil_half = [](long v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); };
    const long a = std::max(n, n + ceil_half(m - 4));
    const long b = std::max(n + 1, n + 1 + ceil_half(m - 5));
    const long c = std::max(2L, 2 + ceil_half(m - 6));
    return std::min({a, b, c});
}

/// D_i(F_n) = x + (2x)^n.
inline IntPoly di_friendship(long n)
{
    if (n < 1)
        throw std::invalid_argument("di_friendship requires n >= 1");
    const auto un = static_cast<std::size_t>(n);
    return IntPoly{0, 1} + IntPoly::monomial(BigInt(1) << un, un);
}

/// The published flower formula x P_{q-3}^n + n x P_{q-3} P_{q-1}^(n-1).
/// Overcounts sets that contain endpoints in several petals.
inline IntPoly di_generalized_friendship_paper(long q, long n)
{
    if (q < 3 || n < 2)
        throw std::invalid_argument("generalized friendship expression requires q >= 3 and n >= 2");
    const auto un = static_cast<unsigned long>(n);
    const IntPoly inner = di_path(q - 3);
    const IntPoly petal = di_path(q - 1);
    return (pow(inner, un) + IntPoly::constant(n) * inner * pow(petal, un - 1)).shifted(1);
}

/// Generating polynomial of the maximal independent sets of P_n that avoid
/// both endpoints. P_0 contributes the empty set (value 1).
inline IntPoly endpoint_free_path_ids_poly(long n)
{
    if (n < 0)
        throw std::invalid_argument("endpoint_free_path_ids_poly requires n >= 0");
    if (n == 0)
        return IntPoly::constant(1);
    // State after each prefix: last vertex chosen / dominated by its left
    // neighbor / not yet dominated.
    IntPoly chosen, dominated, open = IntPoly::constant(1);
    for (long v = 1; v < n; ++v) {
        const bool endpoint = v == n - 1;
        IntPoly next_chosen = endpoint ? IntPoly{} : (dominated + open).shifted(1);
        IntPoly next_dominated = chosen;
        IntPoly next_open = dominated;
        chosen = std::move(next_chosen);
        dominated = std::move(next_dominated);
        open = std::move(next_open);
    }
    return chosen + dominated;
}

/// D_i(F_{q,n}) with the overcount removed:
/// x P_{q-3}^n + (P_{q-1}^n - E_{q-1}^n), where E_j is
/// endpoint_free_path_ids_poly(j). The second term counts sets missing the
/// hub: every petal path is independently dominated and at least one petal
/// uses an endpoint, which dominates the hub.
inline IntPoly di_generalized_friendship_corrected(long q, long n)
{
    if (q < 3 || n < 1)
        throw std::invalid_argument("di_generalized_friendship_corrected requires q >= 3 and n >= 1");
    const auto un = static_cast<unsigned long>(n);
    return pow(di_path(q - 3), un).shifted(1) + pow(di_path(q - 1), un) -
           pow(endpoint_free_path_ids_poly(q - 1), un);
}

/// D_i(K_{m, m-1, ..., m-1}) with n parts of size m-1: x^m + n x^(m-1).
inline IntPoly di_complete_multipartite_special(long m, long n)
{
    if (m < 2 || n < 1)
        throw std::invalid_argument("di_complete_multipartite_special requires m >= 2 and n >= 1");
    const auto um = static_cast<std::size_t>(m);
    return IntPoly::monomial(1, um) + IntPoly::monomial(n, um - 1);
}

inline Graph complete_multipartite_special_graph(long m, long n)
{
    if (m < 2 || n < 1)
        throw std::invalid_argument("complete_multipartite_special_graph requires m >= 2 and n >= 1");
    std::vector<std::size_t> parts{static_cast<std::size_t>(m)};
    parts.insert(parts.end(), static_cast<std::size_t>(n), static_cast<std::size_t>(m - 1));
    return complete_multipartite_graph(parts);
}

/// A connected graph G with D_i(G, -1) = n: the join of n copies of P_8
/// (D_i(P_8, -1) = 1) for n > 0, K_|n| for n < 0, and P_3 for n = 0.
inline Graph construct_alternating_sum_graph(long n)
{
    if (n == 0)
        return path_graph(3);
    if (n < 0)
        return complete_graph(static_cast<std::size_t>(-n));
    Graph g = path_graph(8);
    for (long i = 1; i < n; ++i)
        g = join(g, path_graph(8));
    return g;
}

/// K_{2,1,...,1} with n singleton parts: D_i = x^2 + n x, root -n.
inline Graph construct_integer_root_graph(long n)
{
    if (n < 1)
        throw std::invalid_argument("construct_integer_root_graph requires n >= 1");
    return complete_multipartite_special_graph(2, n);
}

}  // namespace idpoly

#endif  // IDPOLY_FAMILIES_HPP
