#ifndef IDPOLY_POLYNOMIAL_HPP
#define IDPOLY_POLYNOMIAL_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace idpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial c_0 + c_1 x + ... + c_d x^d.
///
/// The coefficient vector is always trimmed: its last entry is nonzero, and
/// the zero polynomial has no coefficients at all.
template <typename T>
class Poly {
public:
    using coefficient_type = T;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(T value) { return Poly(std::vector<T>{std::move(value)}); }

    /// c * x^k
    static Poly monomial(T c, std::size_t k)
    {
        std::vector<T> v(k + 1, T(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }

    static Poly x() { return monomial(T(1), 1); }

    bool is_zero() const noexcept { return c_.empty(); }

    /// Index of the highest nonzero coefficient, or -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

    /// Index of the lowest nonzero coefficient, or -1 for the zero polynomial.
    long valuation() const noexcept
    {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (c_[k] != 0)
                return static_cast<long>(k);
        return -1;
    }

    /// Coefficient of x^k; zero beyond the degree.
    T operator[](std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }

    const T& leading() const
    {
        if (c_.empty())
            throw std::domain_error("zero polynomial has no leading coefficient");
        return c_.back();
    }

    const std::vector<T>& coeffs() const noexcept { return c_; }

    friend bool operator==(const Poly&, const Poly&) = default;

    Poly& operator+=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] += o.c_[k];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        if (o.c_.size() > c_.size())
            c_.resize(o.c_.size(), T(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k)
            c_[k] -= o.c_[k];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator-(Poly a)
    {
        for (auto& c : a.c_)
            c = -c;
        return a;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const T& s, Poly p)
    {
        if (s == 0)
            return {};
        for (auto& c : p.c_)
            c *= s;
        return p;
    }

    /// Multiplies by x^k.
    Poly shifted(std::size_t k) const
    {
        if (is_zero())
            return {};
        std::vector<T> v(k, T(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<T> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

template <typename T>
Poly<T> add(const Poly<T>& p, const Poly<T>& q)
{
    return p + q;
}

template <typename T>
Poly<T> mul(const Poly<T>& p, const Poly<T>& q)
{
    return p * q;
}

template <typename T>
Poly<T> pow(Poly<T> base, unsigned long k)
{
    Poly<T> result = Poly<T>::constant(T(1));
    while (k > 0) {
        if (k & 1u)
            result *= base;
        k >>= 1;
        if (k > 0)
            base *= base;
    }
    return result;
}

/// p(r x): coefficient k becomes r^k c_k.
template <typename T>
Poly<T> scale_arg(const Poly<T>& p, const T& r)
{
    std::vector<T> out = p.coeffs();
    T factor(1);
    for (auto& c : out) {
        c *= factor;
        factor *= r;
    }
    return Poly<T>(std::move(out));
}

/// p(q(x)) by Horner's scheme.
template <typename T>
Poly<T> compose(const Poly<T>& p, const Poly<T>& q)
{
    Poly<T> result;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        result = result * q + Poly<T>::constant(*it);
    return result;
}

template <typename T>
Poly<T> derivative(const Poly<T>& p)
{
    const auto& c = p.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<T> out(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k)
        out[k - 1] = c[k] * T(static_cast<long>(k));
    return Poly<T>(std::move(out));
}

/// Exact evaluation at a rational point.
template <typename T>
Rational evaluate(const Poly<T>& p, const Rational& a)
{
    Rational acc(0);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * a + Rational(*it);
    return acc;
}

inline RatPoly to_rational(const IntPoly& p)
{
    std::vector<Rational> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs())
        v.emplace_back(c);
    return RatPoly(std::move(v));
}

/// Returns the integer polynomial if every coefficient is integral.
inline std::optional<IntPoly> to_integer(const RatPoly& p)
{
    std::vector<BigInt> v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        if (denominator(c) != 1)
            return std::nullopt;
        v.push_back(numerator(c));
    }
    return IntPoly(std::move(v));
}

/// Euclidean division over Q: returns (quotient, remainder).
inline std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs();
    const long db = b.degree();
    if (a.degree() < db)
        return {RatPoly{}, a};
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
    const Rational& lead = b.leading();
    for (long k = a.degree(); k >= db; --k) {
        const Rational coef = rem[static_cast<std::size_t>(k)] / lead;
        if (coef == 0)
            continue;
        quot[static_cast<std::size_t>(k - db)] = coef;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] -= coef * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

/// Quotient a / b when b divides a over Z[x] exactly; nullopt otherwise.
inline std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b)
{
    auto [q, r] = divmod(to_rational(a), to_rational(b));
    if (!r.is_zero())
        return std::nullopt;
    return to_integer(q);
}

/// Monic gcd over Q; gcd(0, 0) is the zero polynomial.
inline RatPoly gcd(RatPoly a, RatPoly b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    const Rational lead = a.leading();
    return (Rational(1) / lead) * a;
}

/// Sum over m of i_m x^m diH^(q-m): the compound-graph combination of the
/// independence polynomial of the base graph with D_i of the attached graph,
/// for a clique cover with q blocks.
inline IntPoly compound_combine(const IntPoly& ig, const IntPoly& dih, std::size_t q)
{
    if (dih.is_zero())
        throw std::invalid_argument("compound_combine: attached polynomial is zero");
    if (ig.degree() > static_cast<long>(q))
        throw std::invalid_argument("compound_combine: deg I(G) = " + std::to_string(ig.degree()) +
                                    " exceeds the cover size " + std::to_string(q));
    // powers[j] = dih^j for j = 0..q
    std::vector<IntPoly> powers{IntPoly::constant(1)};
    for (std::size_t j = 1; j <= q; ++j)
        powers.push_back(powers.back() * dih);
    IntPoly result;
    for (std::size_t m = 0; m < ig.coeffs().size(); ++m) {
        if (ig.coeffs()[m] == 0)
            continue;
        result += ig.coeffs()[m] * powers[q - m].shifted(m);
    }
    return result;
}

/// Ascending-exponent text: "x + 3x^2", "1 - x", "0".
template <typename T>
std::string to_string(const Poly<T>& p, const std::string& var = "x")
{
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        T c = p.coeffs()[k];
        if (c == 0)
            continue;
        const bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (k == 0 || c != 1)
            out << c;
        if (k >= 1)
            out << var;
        if (k >= 2)
            out << '^' << k;
    }
    return out.str();
}

}  // namespace idpoly

#endif  // IDPOLY_POLYNOMIAL_HPP
