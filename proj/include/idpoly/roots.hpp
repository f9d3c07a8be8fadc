#ifndef IDPOLY_ROOTS_HPP
#define IDPOLY_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "shape.hpp"

namespace idpoly {

/// A rational number or one of the two infinities; endpoint of a Sturm query.
struct Bound {
    enum class Kind { neg_inf, finite, pos_inf };

    Kind kind = Kind::finite;
    Rational value{0};

    static Bound at(Rational v) { return {Kind::finite, std::move(v)}; }
    static Bound minus_infinity() { return {Kind::neg_inf, Rational(0)}; }
    static Bound plus_infinity() { return {Kind::pos_inf, Rational(0)}; }

    friend bool operator<(const Bound& a, const Bound& b)
    {
        if (a.kind != b.kind)
            return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.kind == Kind::finite && a.value < b.value;
    }
};

struct SquareFreeFactor {
    RatPoly factor;  // monic, square-free, degree >= 1
    std::size_t multiplicity;
};

/// Yun's algorithm: p = c * prod f_i^i with pairwise coprime square-free f_i.
/// Factors are returned in increasing multiplicity; constant factors are dropped.
inline std::vector<SquareFreeFactor> square_free_decomposition(const RatPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("square-free decomposition of the zero polynomial");
    std::vector<SquareFreeFactor> out;
    if (p.degree() == 0)
        return out;
    const RatPoly dp = derivative(p);
    const RatPoly a0 = gcd(p, dp);
    RatPoly b = divmod(p, a0).first;
    RatPoly c = divmod(dp, a0).first;
    RatPoly d = c - derivative(b);
    for (std::size_t i = 1; b.degree() > 0; ++i) {
        RatPoly a = gcd(b, d);
        if (a.degree() > 0)
            out.push_back({a, i});
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - derivative(b);
    }
    return out;
}

inline RatPoly square_free_part(const RatPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("square-free part of the zero polynomial");
    auto part = divmod(p, gcd(p, derivative(p))).first;
    return (Rational(1) / part.leading()) * part;
}

namespace detail {

inline int sign_of(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

inline int sign_at(const RatPoly& p, const Bound& b)
{
    if (p.is_zero())
        return 0;
    switch (b.kind) {
    case Bound::Kind::pos_inf:
        return sign_of(p.leading());
    case Bound::Kind::neg_inf:
        return sign_of(p.leading()) * (p.degree() % 2 == 0 ? 1 : -1);
    case Bound::Kind::finite:
        break;
    }
    return sign_of(evaluate(p, b.value));
}

inline std::vector<RatPoly> sturm_sequence(const RatPoly& f)
{
    std::vector<RatPoly> seq{f, derivative(f)};
    while (!seq.back().is_zero()) {
        auto r = divmod(seq[seq.size() - 2], seq.back()).second;
        if (r.is_zero())
            break;
        seq.push_back(-r);
    }
    if (seq.back().is_zero())
        seq.pop_back();
    return seq;
}

inline std::size_t sign_variations(const std::vector<RatPoly>& seq, const Bound& b)
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto& s : seq) {
        const int sg = sign_at(s, b);
        if (sg == 0)
            continue;
        if (last != 0 && sg != last)
            ++changes;
        last = sg;
    }
    return changes;
}

// Distinct roots of a square-free f in (lo, hi].
inline std::size_t count_in(const std::vector<RatPoly>& seq, const Bound& lo, const Bound& hi)
{
    const auto vlo = sign_variations(seq, lo);
    const auto vhi = sign_variations(seq, hi);
    return vlo >= vhi ? vlo - vhi : 0;
}

// Integer B with every complex root of f strictly inside |z| < B.
inline BigInt cauchy_bound(const RatPoly& f)
{
    Rational worst(0);
    const auto& c = f.coeffs();
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        Rational r = abs(c[k] / f.leading());
        if (r > worst)
            worst = r;
    }
    Rational b = worst + 1;
    BigInt whole = numerator(b) / denominator(b);
    return whole + 1;
}

}  // namespace detail

/// Number of distinct real roots of p in (lo, hi], by a Sturm sequence on
/// the square-free part.
inline std::size_t sturm_real_root_count(const IntPoly& p, const Bound& lo, const Bound& hi)
{
    if (p.is_zero())
        throw std::domain_error("Sturm count of the zero polynomial");
    if (!(lo < hi))
        throw std::invalid_argument("Sturm count needs lo < hi");
    return detail::count_in(detail::sturm_sequence(square_free_part(to_rational(p))), lo, hi);
}

/// Exact certificate that every root of p is real: each square-free factor
/// has as many distinct real roots as its degree.
inline bool is_real_rooted(const IntPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("real-rootedness of the zero polynomial");
    for (const auto& [f, mult] : square_free_decomposition(to_rational(p))) {
        const auto seq = detail::sturm_sequence(f);
        if (detail::count_in(seq, Bound::minus_infinity(), Bound::plus_infinity()) !=
            static_cast<std::size_t>(f.degree()))
            return false;
    }
    return true;
}

/// One distinct real root, isolated in (lo, hi].
struct RealRoot {
    Rational lo;
    Rational hi;
    std::size_t multiplicity = 1;
    std::optional<Rational> exact;  // set when the root is known as a rational
    double approx = 0.0;
};

namespace detail {

inline Rational bisect_to(const RatPoly& f, const std::vector<RatPoly>& seq, Rational lo, Rational hi,
                          const Rational& tol)
{
    while (hi - lo >= tol) {
        Rational mid = (lo + hi) / 2;
        if (evaluate(f, mid) == 0)
            return mid;
        if (count_in(seq, Bound::at(lo), Bound::at(mid)) == 1)
            hi = mid;
        else
            lo = mid;
    }
    return (lo + hi) / 2;
}

/// Fraction with the smallest denominator strictly inside (a, b); b may be
/// absent for +infinity.
inline Rational simplest_between(const Rational& a, const std::optional<Rational>& b)
{
    const BigInt fl = numerator(a) / denominator(a) - (a < 0 && denominator(a) != 1 ? 1 : 0);
    const Rational next(fl + 1);
    if (!b || next < *b)
        return next;
    // No integer strictly inside, so a and b share the integer part fl.
    const Rational lo = a - Rational(fl);
    const Rational hi = *b - Rational(fl);
    const std::optional<Rational> upper = lo == 0 ? std::nullopt : std::optional<Rational>(1 / lo);
    return Rational(fl) + 1 / simplest_between(1 / hi, upper);
}

/// Leading coefficient of the primitive integer multiple of f.
inline BigInt primitive_leading(const RatPoly& f)
{
    BigInt den = 1;
    for (const auto& c : f.coeffs())
        den = boost::multiprecision::lcm(den, denominator(c));
    BigInt g = 0;
    for (const auto& c : f.coeffs())
        g = boost::multiprecision::gcd(g, numerator(c) * (den / denominator(c)));
    const Rational lead = f.leading() * Rational(den) / Rational(g);
    return boost::multiprecision::abs(numerator(lead));
}

/// The root of f in (lo, hi] if it is rational. A rational root p/q has q
/// dividing the primitive leading coefficient a, and two such fractions are at
/// least 1/a^2 apart, so once the interval is that narrow the root must be the
/// simplest fraction inside it.
inline std::optional<Rational> known_rational_root(const RatPoly& f, const std::vector<RatPoly>& seq, Rational lo,
                                                   Rational hi)
{
    if (f.degree() == 1)
        return -f.coeffs()[0] / f.coeffs()[1];
    if (evaluate(f, hi) == 0)
        return hi;
    const BigInt a = primitive_leading(f);
    const Rational width = Rational(1) / Rational(a * a);
    while (hi - lo >= width) {
        Rational mid = (lo + hi) / 2;
        if (evaluate(f, mid) == 0)
            return mid;
        if (count_in(seq, Bound::at(lo), Bound::at(mid)) == 1)
            hi = std::move(mid);
        else
            lo = std::move(mid);
    }
    const Rational cand = simplest_between(lo, hi);
    if (denominator(cand) <= a && evaluate(f, cand) == 0)
        return cand;
    return std::nullopt;
}

}  // namespace detail

/// Disjoint isolating intervals for the distinct real roots of p, ascending.
/// Multiplicities come from the square-free decomposition.
inline std::vector<RealRoot> isolate_real_roots(const IntPoly& p)
{
    if (p.is_zero())
        throw std::domain_error("root isolation of the zero polynomial");
    std::vector<RealRoot> roots;
    if (p.degree() < 1)
        return roots;
    const Rational approx_tol = Rational(1) / Rational(BigInt(1) << 60);
    const RatPoly rp = to_rational(p);
    const RatPoly sf = square_free_part(rp);
    const auto seq = detail::sturm_sequence(sf);
    const auto factors = square_free_decomposition(rp);
    std::vector<std::vector<RatPoly>> factor_seqs;
    for (const auto& f : factors)
        factor_seqs.push_back(detail::sturm_sequence(f.factor));

    const Rational bound(detail::cauchy_bound(sf));
    // Depth-first, left half first, so roots come out in increasing order.
    std::vector<std::pair<Rational, Rational>> work{{-bound, bound}};
    while (!work.empty()) {
        auto [lo, hi] = work.back();
        work.pop_back();
        const auto count = detail::count_in(seq, Bound::at(lo), Bound::at(hi));
        if (count == 0)
            continue;
        if (count > 1) {
            Rational mid = (lo + hi) / 2;
            work.emplace_back(mid, hi);
            work.emplace_back(lo, mid);
            continue;
        }
        RealRoot root{lo, hi, 0, std::nullopt, 0.0};
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (detail::count_in(factor_seqs[i], Bound::at(lo), Bound::at(hi)) == 1) {
                root.multiplicity = factors[i].multiplicity;
                root.exact = detail::known_rational_root(factors[i].factor, factor_seqs[i], lo, hi);
                break;
            }
        }
        const Rational value = root.exact ? *root.exact : detail::bisect_to(sf, seq, lo, hi, approx_tol);
        root.approx = value.convert_to<double>();
        roots.push_back(std::move(root));
    }
    return roots;
}

/// Narrows an isolating interval (lo, hi] of p by bisection until its width is
/// below tol and returns the midpoint (or the root itself when hit exactly).
inline Rational refine_root(const IntPoly& p, Rational lo, Rational hi, const Rational& tol)
{
    if (tol <= 0)
        throw std::invalid_argument("refine_root: tolerance must be positive");
    if (!(lo < hi))
        throw std::invalid_argument("refine_root: empty interval");
    const RatPoly f = square_free_part(to_rational(p));
    const auto seq = detail::sturm_sequence(f);
    if (detail::count_in(seq, Bound::at(lo), Bound::at(hi)) != 1)
        throw std::invalid_argument("refine_root: interval does not isolate exactly one root");
    if (evaluate(f, hi) == 0)
        return hi;
    return detail::bisect_to(f, seq, std::move(lo), std::move(hi), tol);
}

/// Numeric root with its Newton-step residual |f(z)/f'(z)|.
struct ComplexRoot {
    std::complex<double> value;
    double residual = 0.0;
    std::size_t multiplicity = 1;
};

struct RootReport {
    bool real_rooted = false;
    std::string certification = "sturm";
    std::vector<RealRoot> real_roots;
    std::vector<ComplexRoot> complex_roots;  // every nonzero root, numerically
    double max_modulus = 0.0;
    bool converged = true;
    std::size_t iterations = 0;
};

inline constexpr std::size_t aberth_iteration_cap = 1000;
inline constexpr double default_root_tol = 1e-12;

namespace detail {

using cplx = std::complex<long double>;

struct AberthResult {
    std::vector<cplx> roots;
    std::vector<long double> residuals;
    bool converged = false;
    std::size_t iterations = 0;
};

// Aberth-Ehrlich on a square-free polynomial given by monic long double
// coefficients a_0..a_{m-1} (a_m = 1 implied).
inline AberthResult aberth(const std::vector<long double>& a, long double tol, std::size_t cap)
{
    const std::size_t m = a.size();
    auto eval = [&](cplx z, cplx& dp) {
        cplx p(1.0L, 0.0L);
        dp = cplx(0.0L, 0.0L);
        for (std::size_t k = m; k-- > 0;) {
            dp = dp * z + p;
            p = p * z + a[k];
        }
        return p;
    };

    long double radius = 0.0L;
    for (auto c : a)
        radius = std::max(radius, std::fabs(c));
    radius += 1.0L;

    AberthResult res;
    res.roots.resize(m);
    res.residuals.assign(m, 0.0L);
    const long double two_pi = 6.283185307179586476925286766559L;
    for (std::size_t k = 0; k < m; ++k) {
        const long double angle = two_pi * static_cast<long double>(k) / static_cast<long double>(m) + 0.4L;
        res.roots[k] = std::polar(radius, angle);
    }

    std::vector<cplx> next(m);
    for (res.iterations = 0; res.iterations < cap; ++res.iterations) {
        bool done = true;
        for (std::size_t k = 0; k < m; ++k) {
            cplx dp;
            const cplx p = eval(res.roots[k], dp);
            if (p == cplx(0.0L, 0.0L)) {
                next[k] = res.roots[k];
                res.residuals[k] = 0.0L;
                continue;
            }
            const cplx ratio = p / dp;
            res.residuals[k] = std::abs(ratio);
            if (!(res.residuals[k] < tol))
                done = false;
            cplx repulsion(0.0L, 0.0L);
            for (std::size_t j = 0; j < m; ++j)
                if (j != k)
                    repulsion += 1.0L / (res.roots[k] - res.roots[j]);
            next[k] = res.roots[k] - ratio / (1.0L - ratio * repulsion);
        }
        if (done) {
            res.converged = true;
            break;
        }
        res.roots.swap(next);
    }
    return res;
}

}  // namespace detail

/// Full root report for p: exact real-rootedness certificate and isolated real
/// roots (Sturm), plus numeric approximations of every nonzero root
/// (Aberth-Ehrlich on each square-free factor after dividing out x^v).
/// Non-convergence is reported through `converged`, not thrown.
inline RootReport complex_roots(const IntPoly& p, double tol = default_root_tol)
{
    if (p.degree() < 1)
        throw std::invalid_argument("complex_roots: polynomial must have degree >= 1");
    if (!(tol > 0))
        throw std::invalid_argument("complex_roots: tolerance must be positive");

    RootReport report;
    report.real_rooted = is_real_rooted(p);
    report.real_roots = isolate_real_roots(p);

    const auto v = static_cast<std::size_t>(p.valuation());
    const IntPoly reduced(std::vector<BigInt>(p.coeffs().begin() + static_cast<long>(v), p.coeffs().end()));
    if (reduced.degree() < 1)
        return report;

    for (const auto& [f, mult] : square_free_decomposition(to_rational(reduced))) {
        const std::size_t m = static_cast<std::size_t>(f.degree());
        if (m == 1) {
            const Rational root = -f.coeffs()[0];
            report.complex_roots.push_back({{root.convert_to<double>(), 0.0}, 0.0, mult});
            continue;
        }
        std::vector<long double> a(m);
        for (std::size_t k = 0; k < m; ++k)
            a[k] = f.coeffs()[k].convert_to<long double>();
        const auto res = detail::aberth(a, static_cast<long double>(tol), aberth_iteration_cap);
        report.converged = report.converged && res.converged;
        report.iterations = std::max(report.iterations, res.iterations);
        for (std::size_t k = 0; k < m; ++k) {
            const auto z = res.roots[k];
            std::complex<double> zd(static_cast<double>(z.real()), static_cast<double>(z.imag()));
            // Conjugate pairs of a real polynomial; clean up sub-tolerance imaginary noise.
            if (std::fabs(zd.imag()) <= tol)
                zd.imag(0.0);
            report.complex_roots.push_back({zd, static_cast<double>(res.residuals[k]), mult});
        }
    }
    std::sort(report.complex_roots.begin(), report.complex_roots.end(),
              [](const ComplexRoot& a, const ComplexRoot& b) {
                  if (a.value.real() != b.value.real())
                      return a.value.real() < b.value.real();
                  return a.value.imag() < b.value.imag();
              });
    for (const auto& r : report.complex_roots)
        report.max_modulus = std::max(report.max_modulus, std::abs(r.value) + r.residual);
    return report;
}

struct UnitDiskExpansion {
    BigInt r;  // expansion factor: every vertex replaced by K_r
    RootReport report;
    bool in_unit_disk = false;  // all numeric roots satisfy |z| <= 1 + tol
};

/// Smallest r >= 1 making the coefficient window of D_i(G, r x) nondecreasing,
/// so Enestrom-Kakeya puts every root in the closed unit disk; the numeric
/// report confirms it. Needs a window without internal zero coefficients.
inline UnitDiskExpansion min_expansion_for_unit_disk(const IntPoly& dig, double tol = default_root_tol)
{
    if (dig.degree() < 1 || dig[0] != 0)
        throw std::invalid_argument("min_expansion_for_unit_disk: expected a D_i polynomial (degree >= 1, no constant term)");
    const auto window = coefficient_window(dig);
    for (const auto& c : window)
        if (c == 0)
            throw std::domain_error("min_expansion_for_unit_disk: coefficient window has an internal zero; "
                                    "Enestrom-Kakeya does not apply");
    // c_j r^j <= c_{j+1} r^{j+1}  <=>  r >= c_j / c_{j+1}
    BigInt r = 1;
    for (std::size_t j = 0; j + 1 < window.size(); ++j) {
        BigInt need = (window[j] + window[j + 1] - 1) / window[j + 1];
        if (need > r)
            r = need;
    }
    UnitDiskExpansion out{r, complex_roots(scale_arg(dig, r), tol), false};
    out.in_unit_disk = out.report.converged && out.report.max_modulus <= 1.0 + tol;
    return out;
}

}  // namespace idpoly

#endif  // IDPOLY_ROOTS_HPP
