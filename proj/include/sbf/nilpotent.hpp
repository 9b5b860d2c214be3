// SPDX-License-Identifier: MIT
/**
    \file
    \brief commutative algebra with nilpotent generators: exact jets and Berezin slices

    Values have the form  x = body + Σ_S c_S · ε_S  where S ranges over subsets of a
    declared generator universe {ε_0, …, ε_{n−1}}, ε_S = ∏_{p∈S} ε_p, and every
    generator squares to zero.  The generators model Grassmann moduli squared — which
    commute — so the whole algebra is commutative, and Berezin integration over a
    modulus pair reduces to extracting a coefficient slice.

    Because soul^{n+1} = 0 exactly, composing an analytic function with such a value
    is a *finite* Taylor sum: these values double as exact higher-order jets, and all
    derivatives taken through them carry no truncation error.
*/
#ifndef SBF_NILPOTENT_HPP
#define SBF_NILPOTENT_HPP

#include <algorithm>
#include <cassert>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include <sbf/rational.hpp>

namespace sbf {

using cplx = std::complex<double>;

inline auto coeff_norm(double x) -> double { return std::abs(x); }
inline auto coeff_norm(cplx const& z) -> double { return std::abs(z); }

/// coefficient-typed copy of a small integer (index, factorial counter)
inline auto coeff_of_index(double, std::size_t k) -> double { return double(k); }
inline auto coeff_of_index(cplx, std::size_t k) -> cplx { return double(k); }
inline auto coeff_of_index(rational_t, std::size_t k) -> rational_t
{
    return rational_t{static_cast<std::int64_t>(k)};
}

/// largest generator universe supported by the mask representation
inline constexpr std::size_t max_generators = 8;

/// Berezin convention: ∫dξ*dξ extracts the ε-coefficient with this sign
inline constexpr int berezin_sign = +1;

template <typename coeff_t>
struct nilpotent_t
{
    using mask_t = std::uint32_t;

    struct term_t
    {
        mask_t mask;
        coeff_t value;
        friend auto operator==(term_t const&, term_t const&) -> bool = default;
    };

    /// universe size; 0 marks a pure scalar compatible with any universe
    std::uint8_t num_generators{0};
    /// sorted by mask, exact zeros dropped, all mask bits < num_generators
    std::vector<term_t> terms;

    nilpotent_t() = default;
    nilpotent_t(coeff_t body) { if (!(body == coeff_t{})) terms.push_back({0u, body}); }
    nilpotent_t(coeff_t body, std::uint8_t n) : num_generators{n}
    {
        if (n > max_generators) throw std::invalid_argument{"nilpotent_t: universe too large"};
        if (!(body == coeff_t{})) terms.push_back({0u, body});
    }

    /// the generator ε_p (0-based) in a universe of n generators
    static auto generator(std::size_t p, std::uint8_t n) -> nilpotent_t
    {
        if (n > max_generators || p >= n)
            throw std::invalid_argument{"nilpotent_t: generator index outside universe"};
        auto g = nilpotent_t{};
        g.num_generators = n;
        g.terms.push_back({mask_t{1} << p, coeff_t{1}});
        return g;
    }

    auto body() const -> coeff_t { return coefficient(0u); }

    auto coefficient(mask_t mask) const -> coeff_t
    {
        auto const it = std::lower_bound(terms.begin(), terms.end(), mask,
                                         [](term_t const& t, mask_t m) { return t.mask < m; });
        return (it != terms.end() && it->mask == mask) ? it->value : coeff_t{};
    }

    /// terms with at least one generator (the value minus its body)
    auto soul() const -> nilpotent_t
    {
        auto s = nilpotent_t{};
        s.num_generators = num_generators;
        for (auto const& t : terms)
            if (t.mask != 0) s.terms.push_back(t);
        return s;
    }

    auto is_zero() const -> bool { return terms.empty(); }

    friend auto operator==(nilpotent_t const& a, nilpotent_t const& b) -> bool
    {
        return a.terms == b.terms; // universes may differ only by scalar promotion
    }

    friend auto operator+(nilpotent_t const& a, nilpotent_t const& b) -> nilpotent_t
    {
        auto r = nilpotent_t{};
        r.num_generators = merged_universe(a, b);
        r.terms.reserve(a.terms.size() + b.terms.size());
        auto ia = a.terms.begin();
        auto ib = b.terms.begin();
        while (ia != a.terms.end() || ib != b.terms.end()) {
            if (ib == b.terms.end() || (ia != a.terms.end() && ia->mask < ib->mask))
                r.terms.push_back(*ia++);
            else if (ia == a.terms.end() || ib->mask < ia->mask)
                r.terms.push_back(*ib++);
            else {
                auto const v = ia->value + ib->value;
                if (!(v == coeff_t{})) r.terms.push_back({ia->mask, v});
                ++ia;
                ++ib;
            }
        }
        return r;
    }

    friend auto operator-(nilpotent_t const& a) -> nilpotent_t
    {
        auto r = a;
        for (auto& t : r.terms) t.value = -t.value;
        return r;
    }

    friend auto operator-(nilpotent_t const& a, nilpotent_t const& b) -> nilpotent_t
    {
        return a + (-b);
    }

    friend auto operator*(nilpotent_t const& a, nilpotent_t const& b) -> nilpotent_t
    {
        auto const n = merged_universe(a, b);
        // dense accumulation over the ≤ 2^n masks; a repeated generator kills a term
        auto dense = std::vector<coeff_t>(std::size_t{1} << n);
        for (auto const& ta : a.terms)
            for (auto const& tb : b.terms)
                if ((ta.mask & tb.mask) == 0) dense[ta.mask | tb.mask] += ta.value * tb.value;
        auto r = nilpotent_t{};
        r.num_generators = n;
        for (mask_t m = 0; m < dense.size(); ++m)
            if (!(dense[m] == coeff_t{})) r.terms.push_back({m, dense[m]});
        return r;
    }

    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    friend auto operator*(nilpotent_t const& a, s_t const& s) -> nilpotent_t
    {
        auto const c = coeff_t(s);
        auto r = nilpotent_t{};
        r.num_generators = a.num_generators;
        if (c == coeff_t{}) return r;
        r.terms = a.terms;
        for (auto& t : r.terms) t.value = t.value * c;
        return r;
    }

    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    friend auto operator*(s_t const& s, nilpotent_t const& a) -> nilpotent_t
    {
        return a * s;
    }

    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    friend auto operator+(nilpotent_t const& a, s_t const& s) -> nilpotent_t
    {
        return a + nilpotent_t{coeff_t(s)};
    }

    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    friend auto operator+(s_t const& s, nilpotent_t const& a) -> nilpotent_t
    {
        return a + nilpotent_t{coeff_t(s)};
    }

    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    friend auto operator-(nilpotent_t const& a, s_t const& s) -> nilpotent_t
    {
        return a + nilpotent_t{-coeff_t(s)};
    }

    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    friend auto operator-(s_t const& s, nilpotent_t const& a) -> nilpotent_t
    {
        return (-a) + nilpotent_t{coeff_t(s)};
    }

    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    friend auto operator/(nilpotent_t const& a, s_t const& s) -> nilpotent_t
    {
        auto r = a;
        for (auto& t : r.terms) t.value = t.value / coeff_t(s);
        return r;
    }

    auto operator+=(nilpotent_t const& o) -> nilpotent_t& { return *this = *this + o; }
    auto operator-=(nilpotent_t const& o) -> nilpotent_t& { return *this = *this - o; }
    auto operator*=(nilpotent_t const& o) -> nilpotent_t& { return *this = *this * o; }

    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    auto operator+=(s_t const& s) -> nilpotent_t& { return *this = *this + s; }
    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    auto operator-=(s_t const& s) -> nilpotent_t& { return *this = *this - s; }
    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    auto operator*=(s_t const& s) -> nilpotent_t& { return *this = *this * s; }
    template <typename s_t>
        requires std::convertible_to<s_t, coeff_t>
    auto operator/=(s_t const& s) -> nilpotent_t& { return *this = *this / s; }

    friend auto operator<<(std::ostream& os, nilpotent_t const& x) -> std::ostream&
    {
        if (x.terms.empty()) return os << "0";
        auto first = true;
        for (auto const& t : x.terms) {
            if (!first) os << " + ";
            first = false;
            os << '(' << t.value << ')';
            for (std::size_t p = 0; p < max_generators; ++p)
                if (t.mask & (mask_t{1} << p)) os << "e" << p;
        }
        return os;
    }

    static auto merged_universe(nilpotent_t const& a, nilpotent_t const& b) -> std::uint8_t
    {
        if (a.num_generators == b.num_generators) return a.num_generators;
        if (a.num_generators == 0) return b.num_generators;
        if (b.num_generators == 0) return a.num_generators;
        throw std::invalid_argument{"nilpotent_t: mismatched generator universes"};
    }
};

/// Σ |c_S| — the norm used for quadrature error control of jet-valued integrands
template <typename coeff_t>
auto value_norm(nilpotent_t<coeff_t> const& x) -> double
{
    auto n = 0.0;
    for (auto const& t : x.terms) n += coeff_norm(t.value);
    return n;
}

inline auto value_norm(double x) -> double { return std::abs(x); }
inline auto value_norm(cplx const& z) -> double { return std::abs(z); }

/// coefficient of ∏_{p∈gens} ε_p
template <typename coeff_t>
auto coefficient(nilpotent_t<coeff_t> const& x, std::initializer_list<std::size_t> gens)
    -> coeff_t
{
    auto mask = typename nilpotent_t<coeff_t>::mask_t{0};
    for (auto const p : gens) mask |= typename nilpotent_t<coeff_t>::mask_t{1} << p;
    return x.coefficient(mask);
}

/**
    \brief Berezin integral over the modulus pair of generator p.

    Keeps exactly the terms containing ε_p, removes ε_p from them, and applies the
    fixed sign convention.  Terms without ε_p integrate to zero and are discarded.
*/
template <typename coeff_t>
auto berezin_pair(nilpotent_t<coeff_t> const& x, std::size_t p) -> nilpotent_t<coeff_t>
{
    if (p >= x.num_generators)
        throw std::invalid_argument{"berezin_pair: generator outside universe"};
    auto const bit = typename nilpotent_t<coeff_t>::mask_t{1} << p;
    auto r = nilpotent_t<coeff_t>{};
    r.num_generators = x.num_generators;
    for (auto const& t : x.terms)
        if (t.mask & bit) r.terms.push_back({t.mask & ~bit, t.value * coeff_t{berezin_sign}});
    std::sort(r.terms.begin(), r.terms.end(),
              [](auto const& a, auto const& b) { return a.mask < b.mask; });
    return r;
}

/// exact quotient x / ε_p; throws unless every term of x contains ε_p
template <typename coeff_t>
auto divide_by_generator(nilpotent_t<coeff_t> const& x, std::size_t p) -> nilpotent_t<coeff_t>
{
    auto const bit = typename nilpotent_t<coeff_t>::mask_t{1} << p;
    for (auto const& t : x.terms)
        if (!(t.mask & bit))
            throw std::domain_error{"divide_by_generator: value not divisible"};
    auto r = nilpotent_t<coeff_t>{};
    r.num_generators = x.num_generators;
    for (auto const& t : x.terms) r.terms.push_back({t.mask & ~bit, t.value});
    std::sort(r.terms.begin(), r.terms.end(),
              [](auto const& a, auto const& b) { return a.mask < b.mask; });
    return r;
}

/**
    \brief evaluates a polynomial in the generators at given nilpotent values.

    x = Σ_S c_S ∏_{p∈S} ε_p is mapped to Σ_S c_S ∏_{p∈S} values[p], where the
    values live in a (possibly different) generator universe.  This is the
    change-of-frame operation between two nilpotent parametrizations.
*/
template <typename coeff_t>
auto substitute_generators(nilpotent_t<coeff_t> const& x,
                           std::span<nilpotent_t<coeff_t> const> values)
    -> nilpotent_t<coeff_t>
{
    auto result = nilpotent_t<coeff_t>{};
    for (auto const& t : x.terms) {
        auto prod = nilpotent_t<coeff_t>{t.value};
        for (std::size_t p = 0; p < max_generators; ++p)
            if (t.mask & (typename nilpotent_t<coeff_t>::mask_t{1} << p)) {
                if (p >= values.size())
                    throw std::invalid_argument{"substitute_generators: missing value"};
                prod = prod * values[p];
            }
        result += prod;
    }
    return result;
}

/**
    \brief composes an analytic function with a nilpotent value.

    derivs[k] must hold f^{(k)}(x.body) for k = 0 … nilpotency depth of the soul.
    The Taylor sum  Σ_k derivs[k]/k! · soul^k  terminates exactly, so the result is
    the exact image of x under f (no truncation error).
*/
template <typename coeff_t>
auto apply_analytic(nilpotent_t<coeff_t> const& x, std::span<coeff_t const> derivs)
    -> nilpotent_t<coeff_t>
{
    if (derivs.empty()) throw std::invalid_argument{"apply_analytic: no derivatives"};
    auto result = nilpotent_t<coeff_t>{derivs[0], x.num_generators};
    auto const soul = x.soul();
    auto term = nilpotent_t<coeff_t>{coeff_t{1}, x.num_generators}; // soul^k / k!
    for (std::size_t k = 1; ; ++k) {
        term = term * soul;
        if (term.is_zero()) break;
        term = term / coeff_of_index(coeff_t{}, k);
        if (k >= derivs.size())
            throw std::invalid_argument{"apply_analytic: nilpotency depth exceeds derivatives"};
        result += term * derivs[k];
    }
    return result;
}

// ---------------------------------------------------------------------------------
// analytic library over complex-coefficient jets
// ---------------------------------------------------------------------------------

/// numeric jet: the production coefficient field
using njet_t = nilpotent_t<cplx>;
/// exact jet: rational coefficients for identity checks without tolerances
using qjet_t = nilpotent_t<rational_t>;

namespace detail {

    template <typename f_t>
    auto lift(njet_t const& x, f_t&& nth_derivative) -> njet_t
    {
        auto const depth = std::size_t{x.num_generators} + 1;
        auto derivs = std::vector<cplx>(depth);
        for (std::size_t k = 0; k < depth; ++k) derivs[k] = nth_derivative(x.body(), k);
        return apply_analytic<cplx>(x, derivs);
    }

} // namespace detail

inline auto exp(njet_t const& x) -> njet_t
{
    // d^k exp = exp
    return detail::lift(x, [](cplx c, std::size_t) { return std::exp(c); });
}

inline auto log(njet_t const& x) -> njet_t
{
    // d^k log = (−1)^{k−1} (k−1)! / x^k  (principal branch)
    if (x.body() == cplx{}) throw std::domain_error{"log: zero body"};
    return detail::lift(x, [](cplx c, std::size_t k) -> cplx {
        if (k == 0) return std::log(c);
        auto d = cplx{1};
        for (std::size_t j = 1; j < k; ++j) d *= -double(j);
        return d / std::pow(c, double(k));
    });
}

inline auto pow(njet_t const& x, double a) -> njet_t
{
    // d^k x^a = a(a−1)…(a−k+1) x^{a−k}  (principal branch)
    if (x.body() == cplx{}) throw std::domain_error{"pow: zero body"};
    return detail::lift(x, [a](cplx c, std::size_t k) {
        auto f = cplx{1};
        for (std::size_t j = 0; j < k; ++j) f *= a - double(j);
        return f * std::pow(c, a - double(k));
    });
}

inline auto sqrt(njet_t const& x) -> njet_t { return pow(x, 0.5); }

inline auto inverse(njet_t const& x) -> njet_t
{
    // d^k x^{−1} = (−1)^k k! x^{−k−1}
    if (x.body() == cplx{}) throw std::domain_error{"inverse: zero body"};
    return detail::lift(x, [](cplx c, std::size_t k) {
        auto d = cplx{1} / c;
        for (std::size_t j = 1; j <= k; ++j) d *= -double(j) / c;
        return d;
    });
}

inline auto inverse(cplx const& x) -> cplx
{
    if (x == cplx{}) throw std::domain_error{"inverse: zero"};
    return cplx{1} / x;
}

inline auto operator/(njet_t const& a, njet_t const& b) -> njet_t { return a * inverse(b); }

inline auto cos(njet_t const& x) -> njet_t
{
    // derivative cycle cos, −sin, −cos, sin
    return detail::lift(x, [](cplx c, std::size_t k) {
        switch (k % 4) {
        case 0: return std::cos(c);
        case 1: return -std::sin(c);
        case 2: return -std::cos(c);
        default: return std::sin(c);
        }
    });
}

inline auto sin(njet_t const& x) -> njet_t
{
    return detail::lift(x, [](cplx c, std::size_t k) {
        switch (k % 4) {
        case 0: return std::sin(c);
        case 1: return std::cos(c);
        case 2: return -std::sin(c);
        default: return -std::cos(c);
        }
    });
}

// ---------------------------------------------------------------------------------
// modified Bessel functions I_ν, usable on real, complex, and jet arguments
// ---------------------------------------------------------------------------------

/// I_ν(x) for integer ν and real x, extending the library function to x < 0 by parity
inline auto cyl_bessel_i(int nu, double x) -> double
{
    auto const n = std::abs(nu); // I_{−n} = I_n for integer order
    auto const v = std::cyl_bessel_i(double(n), std::abs(x));
    return (x < 0.0 && (n % 2) != 0) ? -v : v;
}

/**
    \brief I_ν(z) for integer ν and complex z by the defining power series.

    Σ_k (z/2)^{ν+2k} / (k! (ν+k)!).  Used only off the real axis, where the library
    function is unavailable; the series is sound for moderate |z| (terms are summed
    to machine tails, with a guard against the |z| ≳ 35 cancellation regime).
*/
inline auto cyl_bessel_i(int nu, cplx z) -> cplx
{
    if (z.imag() == 0.0) return cyl_bessel_i(nu, z.real());
    if (std::abs(z) > 35.0)
        throw std::domain_error{"cyl_bessel_i: complex argument too large for series"};
    auto const n = std::abs(nu);
    auto const h = z * 0.5;
    auto term = cplx{1};
    for (int j = 1; j <= n; ++j) term *= h / double(j); // (z/2)^n / n!
    auto sum = term;
    for (int k = 1; k < 200; ++k) {
        term *= h * h / (double(k) * double(n + k));
        sum += term;
        if (std::abs(term) < 1e-18 * (1.0 + std::abs(sum))) break;
    }
    return (nu < 0 && (n % 2) != 0) ? -sum : sum; // integer order: I_{−n} = I_n
}

inline auto cyl_bessel_i(int nu, njet_t const& x) -> njet_t
{
    // d^m I_ν = 2^{−m} Σ_j binom(m,j) I_{ν−m+2j}
    return detail::lift(x, [nu](cplx c, std::size_t m) {
        auto d = cplx{};
        auto binom = 1.0;
        for (std::size_t j = 0; j <= m; ++j) {
            d += binom * cyl_bessel_i(nu - int(m) + 2 * int(j), c);
            binom *= double(m - j) / double(j + 1);
        }
        return d * std::pow(0.5, double(m));
    });
}

} // namespace sbf

#endif // SBF_NILPOTENT_HPP
