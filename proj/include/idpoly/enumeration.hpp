#ifndef IDPOLY_ENUMERATION_HPP
#define IDPOLY_ENUMERATION_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <future>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "graph.hpp"
#include "polynomial.hpp"
#include "vertex_set.hpp"

namespace idpoly {

/// An input exceeds the order an exhaustive routine is allowed to sweep.
class size_guard_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Default cap for 2^n sweeps (brute-force D_i oracle, domination number).
inline constexpr std::size_t exhaustive_max_order = 25;

struct EnumOptions {
    /// Top-level branch subtrees are spread over this many threads. Output
    /// does not depend on the value.
    unsigned workers = 1;
};

namespace detail {

inline void require_mask_order(const Graph& g, const char* what)
{
    if (g.order() > max_mask_order)
        throw size_guard_error(std::string(what) + ": graph order " + std::to_string(g.order()) +
                               " exceeds the supported maximum of " + std::to_string(max_mask_order));
}

inline void require_exhaustive_order(const Graph& g, std::size_t max_n, const char* what)
{
    const std::size_t cap = std::min(max_n, std::size_t{62});
    if (g.order() > cap)
        throw size_guard_error(std::string(what) + ": graph order " + std::to_string(g.order()) +
                               " exceeds the exhaustive-search guard of " + std::to_string(cap));
}

// closed[v] = N[v] as a bitmask.
inline std::vector<std::uint64_t> closed_neighborhoods(const Graph& g)
{
    std::vector<std::uint64_t> closed(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        closed[v] = std::uint64_t{1} << v;
        for (Vertex u : g.neighbors(v))
            closed[v] |= std::uint64_t{1} << u;
    }
    return closed;
}

inline bool independent_dominating_mask(const std::vector<std::uint64_t>& closed, std::uint64_t all,
                                        std::uint64_t s)
{
    std::uint64_t covered = 0;
    for (auto b = s; b != 0; b &= b - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(b));
        if ((closed[v] & s) != (std::uint64_t{1} << v))
            return false;
        covered |= closed[v];
    }
    return covered == all;
}

// Bron-Kerbosch with pivoting, run on the complement implicitly: R grows as
// an independent set, P holds vertices non-adjacent to all of R, X holds
// already-explored candidates. Branches are visited in increasing label
// order, so the emission order is deterministic.
class MisSearch {
public:
    explicit MisSearch(const Graph& g)
        : closed_(closed_neighborhoods(g)), all_(VertexSet::prefix(g.order()).bits())
    {
    }

    std::uint64_t all() const noexcept { return all_; }

    std::uint64_t non_neighbors(std::size_t v) const noexcept { return all_ & ~closed_[v]; }

    // Vertices to branch on at (P, X): P ∩ N[u] for the pivot u ∈ P ∪ X with
    // the fewest such vertices (smallest label on ties).
    std::uint64_t branch_set(std::uint64_t p, std::uint64_t x) const noexcept
    {
        std::uint64_t best = p;
        int best_count = std::popcount(p);
        for (auto b = p | x; b != 0; b &= b - 1) {
            const auto u = static_cast<std::size_t>(std::countr_zero(b));
            const auto cand = p & closed_[u];
            const int count = std::popcount(cand);
            if (count < best_count) {
                best = cand;
                best_count = count;
            }
        }
        return best;
    }

    template <typename Visit>
    void run(std::uint64_t r, std::uint64_t p, std::uint64_t x, Visit& visit) const
    {
        if (p == 0) {
            if (x == 0)
                visit(r);
            return;
        }
        for (auto b = branch_set(p, x); b != 0; b &= b - 1) {
            const auto v = static_cast<std::size_t>(std::countr_zero(b));
            const auto bit = std::uint64_t{1} << v;
            const auto keep = non_neighbors(v);
            run(r | bit, p & keep, x & keep, visit);
            p &= ~bit;
            x |= bit;
        }
    }

private:
    std::vector<std::uint64_t> closed_;
    std::uint64_t all_;
};

struct Subtree {
    std::uint64_t r, p, x;
};

// The root's branches, each an independent (R, P, X) search problem.
inline std::vector<Subtree> root_subtrees(const MisSearch& search)
{
    std::vector<Subtree> out;
    std::uint64_t p = search.all();
    std::uint64_t x = 0;
    for (auto b = search.branch_set(p, x); b != 0; b &= b - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(b));
        const auto bit = std::uint64_t{1} << v;
        const auto keep = search.non_neighbors(v);
        out.push_back({bit, p & keep, x & keep});
        p &= ~bit;
        x |= bit;
    }
    return out;
}

// Runs `work(i)` for every subtree index, striding indices over the workers.
template <typename Work>
void for_each_subtree(std::size_t count, unsigned workers, Work&& work)
{
    const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            work(i);
        return;
    }
    std::vector<std::future<void>> jobs;
    for (unsigned t = 0; t < threads; ++t)
        jobs.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t i = t; i < count; i += threads)
                work(i);
        }));
    for (auto& j : jobs)
        j.get();
}

}  // namespace detail

/// S is independent and N[S] = V(G).
inline bool is_independent_dominating(const Graph& g, const VertexSet& s)
{
    if (s.span() > g.order())
        throw std::out_of_range("vertex set refers to a label outside the graph");
    detail::require_mask_order(g, "is_independent_dominating");
    return detail::independent_dominating_mask(detail::closed_neighborhoods(g),
                                               VertexSet::prefix(g.order()).bits(), s.bits());
}

/// Streams every maximal independent set exactly once, in a fixed order.
/// The null graph has exactly one: the empty set.
inline void for_each_maximal_independent_set(const Graph& g, const std::function<void(const VertexSet&)>& visit)
{
    detail::require_mask_order(g, "maximal_independent_sets");
    const detail::MisSearch search(g);
    auto emit = [&](std::uint64_t r) { visit(VertexSet(r)); };
    search.run(0, search.all(), 0, emit);
}

/// All maximal independent sets in the same order as the streaming form,
/// regardless of the worker count.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g, EnumOptions opts = {})
{
    detail::require_mask_order(g, "maximal_independent_sets");
    const detail::MisSearch search(g);
    if (g.order() == 0)
        return {VertexSet{}};
    const auto subtrees = detail::root_subtrees(search);
    std::vector<std::vector<VertexSet>> parts(subtrees.size());
    detail::for_each_subtree(subtrees.size(), opts.workers, [&](std::size_t i) {
        auto collect = [&](std::uint64_t r) { parts[i].emplace_back(r); };
        search.run(subtrees[i].r, subtrees[i].p, subtrees[i].x, collect);
    });
    std::vector<VertexSet> out;
    for (auto& part : parts)
        out.insert(out.end(), part.begin(), part.end());
    return out;
}

/// D_i(G, x) by maximal independent set enumeration. D_i of the null graph is 1.
inline IntPoly di_polynomial(const Graph& g, EnumOptions opts = {})
{
    detail::require_mask_order(g, "di_polynomial");
    if (g.order() == 0)
        return IntPoly::constant(1);
    const detail::MisSearch search(g);
    const auto subtrees = detail::root_subtrees(search);
    std::vector<std::vector<std::uint64_t>> counts(subtrees.size(), std::vector<std::uint64_t>(g.order() + 1, 0));
    detail::for_each_subtree(subtrees.size(), opts.workers, [&](std::size_t i) {
        auto tally = [&](std::uint64_t r) { ++counts[i][static_cast<std::size_t>(std::popcount(r))]; };
        search.run(subtrees[i].r, subtrees[i].p, subtrees[i].x, tally);
    });
    std::vector<BigInt> coeffs(g.order() + 1, BigInt(0));
    for (const auto& c : counts)
        for (std::size_t k = 0; k < c.size(); ++k)
            coeffs[k] += c[k];
    return IntPoly(std::move(coeffs));
}

/// D_i(G, x) by testing all 2^n subsets. Anti-drift oracle for di_polynomial.
inline IntPoly di_polynomial_bruteforce(const Graph& g, std::size_t max_n = exhaustive_max_order)
{
    detail::require_exhaustive_order(g, max_n, "di_polynomial_bruteforce");
    if (g.order() == 0)
        return IntPoly::constant(1);
    const auto closed = detail::closed_neighborhoods(g);
    const auto all = VertexSet::prefix(g.order()).bits();
    std::vector<std::uint64_t> counts(g.order() + 1, 0);
    for (std::uint64_t s = 1; s <= all; ++s)
        if (detail::independent_dominating_mask(closed, all, s))
            ++counts[static_cast<std::size_t>(std::popcount(s))];
    return IntPoly(std::vector<BigInt>(counts.begin(), counts.end()));
}

/// I(G, x) via I(G) = I(G - v) + x I(G - N[v]), memoized on the remaining
/// vertex set; v is the lowest remaining label.
inline IntPoly independence_polynomial(const Graph& g)
{
    detail::require_mask_order(g, "independence_polynomial");
    const auto closed = detail::closed_neighborhoods(g);
    std::unordered_map<std::uint64_t, IntPoly> memo;
    const IntPoly one = IntPoly::constant(1);
    const IntPoly one_plus_x{1, 1};

    std::function<IntPoly(std::uint64_t)> solve = [&](std::uint64_t rest) -> IntPoly {
        if (rest == 0)
            return one;
        if (auto it = memo.find(rest); it != memo.end())
            return it->second;
        const auto v = static_cast<std::size_t>(std::countr_zero(rest));
        const auto bit = std::uint64_t{1} << v;
        IntPoly result;
        if ((closed[v] & rest) == bit)
            result = one_plus_x * solve(rest & ~bit);
        else
            result = solve(rest & ~bit) + solve(rest & ~closed[v]).shifted(1);
        memo.emplace(rest, result);
        return result;
    };
    return solve(VertexSet::prefix(g.order()).bits());
}

namespace detail {

inline void require_nonnull(const Graph& g, const char* what)
{
    if (g.order() == 0)
        throw std::invalid_argument(std::string(what) + " is undefined for the null graph");
}

}  // namespace detail

/// Independence number: the degree of D_i(G, x).
inline std::size_t alpha(const Graph& g, EnumOptions opts = {})
{
    detail::require_nonnull(g, "alpha");
    return static_cast<std::size_t>(di_polynomial(g, opts).degree());
}

/// Independent domination number: the lowest exponent of D_i(G, x).
inline std::size_t gamma_i(const Graph& g, EnumOptions opts = {})
{
    detail::require_nonnull(g, "gamma_i");
    return static_cast<std::size_t>(di_polynomial(g, opts).valuation());
}

/// Domination number by increasing-size subset search.
inline std::size_t gamma(const Graph& g, std::size_t max_n = exhaustive_max_order)
{
    detail::require_nonnull(g, "gamma");
    detail::require_exhaustive_order(g, max_n, "gamma");
    const auto closed = detail::closed_neighborhoods(g);
    const std::size_t n = g.order();
    const auto all = VertexSet::prefix(n).bits();
    for (std::size_t k = 1; k <= n; ++k) {
        // Gosper's hack over k-subsets of n bits.
        std::uint64_t s = (std::uint64_t{1} << k) - 1;
        while (s <= all) {
            std::uint64_t covered = 0;
            for (auto b = s; b != 0; b &= b - 1)
                covered |= closed[static_cast<std::size_t>(std::countr_zero(b))];
            if (covered == all)
                return k;
            const std::uint64_t c = s & (~s + 1);
            const std::uint64_t r = s + c;
            if (r == 0)
                break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return n;
}

/// Every maximal independent set has the same size, i.e. D_i is a monomial.
inline bool is_well_covered(const Graph& g, EnumOptions opts = {})
{
    detail::require_nonnull(g, "is_well_covered");
    const auto d = di_polynomial(g, opts);
    return std::count_if(d.coeffs().begin(), d.coeffs().end(), [](const BigInt& c) { return c != 0; }) == 1;
}

}  // namespace idpoly

#endif  // IDPOLY_ENUMERATION_HPP
