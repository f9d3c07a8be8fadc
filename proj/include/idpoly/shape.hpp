#ifndef IDPOLY_SHAPE_HPP
#define IDPOLY_SHAPE_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace idpoly {

// Coefficient-shape predicates. All of them look only at the window from the
// lowest to the highest nonzero coefficient, re-indexed from 0, so the zero
// constant term of every D_i polynomial does not break unimodality.

/// Coefficients between the lowest and highest nonzero ones (inclusive).
/// Throws std::domain_error on a negative coefficient.
inline std::vector<BigInt> coefficient_window(const IntPoly& p)
{
    for (const auto& c : p.coeffs())
        if (c < 0)
            throw std::domain_error("shape checks need nonnegative coefficients");
    if (p.is_zero())
        return {};
    const auto& c = p.coeffs();
    return {c.begin() + p.valuation(), c.end()};
}

inline bool is_unimodal(const IntPoly& p)
{
    const auto a = coefficient_window(p);
    std::size_t k = 1;
    while (k < a.size() && a[k - 1] <= a[k])
        ++k;
    while (k < a.size() && a[k - 1] >= a[k])
        ++k;
    return k >= a.size();
}

/// a_k^2 >= a_{k-1} a_{k+1} across the window.
inline bool is_log_concave(const IntPoly& p)
{
    const auto a = coefficient_window(p);
    for (std::size_t k = 1; k + 1 < a.size(); ++k)
        if (a[k] * a[k] < a[k - 1] * a[k + 1])
            return false;
    return true;
}

inline bool is_symmetric(const IntPoly& p)
{
    const auto a = coefficient_window(p);
    for (std::size_t k = 0; k < a.size() / 2; ++k)
        if (a[k] != a[a.size() - 1 - k])
            return false;
    return true;
}

/// Newton's inequalities on the window a_0..a_n:
/// a_k^2 >= a_{k-1} a_{k+1} (1 + 1/k)(1 + 1/(n-k)) for 1 <= k <= n-1,
/// compared exactly after clearing denominators.
inline bool newton_check(const IntPoly& p)
{
    const auto a = coefficient_window(p);
    if (a.size() < 3)
        return true;
    const std::size_t n = a.size() - 1;
    for (std::size_t k = 1; k < n; ++k) {
        const BigInt lhs = a[k] * a[k] * BigInt(k) * BigInt(n - k);
        const BigInt rhs = a[k - 1] * a[k + 1] * BigInt(k + 1) * BigInt(n - k + 1);
        if (lhs < rhs)
            return false;
    }
    return true;
}

}  // namespace idpoly

#endif  // IDPOLY_SHAPE_HPP
