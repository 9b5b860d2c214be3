// SPDX-License-Identifier: MIT
/**
    \file
    \brief exact rational arithmetic for coefficient-level algebra checks

    The nilpotent algebra is templated on its coefficient field.  Floating
    point is the production mode; this reduced fraction over 64-bit integers
    (with 128-bit intermediates and overflow detection) is the testing mode,
    so that algebraic identities can be checked by exact equality instead of
    tolerances.
*/
#ifndef SBF_RATIONAL_HPP
#define SBF_RATIONAL_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace sbf {

/// reduced fraction num/den with den > 0
struct rational_t
{
    std::int64_t num{0};
    std::int64_t den{1};

    rational_t() = default;
    rational_t(std::int64_t n) : num{n} {}
    rational_t(std::int64_t n, std::int64_t d) : num{n}, den{d} { reduce(); }

    friend auto operator==(rational_t const& a, rational_t const& b) -> bool = default;

    friend auto operator+(rational_t const& a, rational_t const& b) -> rational_t
    {
        return make(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend auto operator-(rational_t const& a, rational_t const& b) -> rational_t
    {
        return make(i128(a.num) * b.den - i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend auto operator*(rational_t const& a, rational_t const& b) -> rational_t
    {
        return make(i128(a.num) * b.num, i128(a.den) * b.den);
    }
    friend auto operator/(rational_t const& a, rational_t const& b) -> rational_t
    {
        if (b.num == 0) throw std::domain_error{"rational_t: division by zero"};
        return make(i128(a.num) * b.den, i128(a.den) * b.num);
    }
    friend auto operator-(rational_t const& a) -> rational_t { return {-a.num, a.den}; }

    auto operator+=(rational_t const& o) -> rational_t& { return *this = *this + o; }
    auto operator-=(rational_t const& o) -> rational_t& { return *this = *this - o; }
    auto operator*=(rational_t const& o) -> rational_t& { return *this = *this * o; }
    auto operator/=(rational_t const& o) -> rational_t& { return *this = *this / o; }

    explicit operator double() const { return double(num) / double(den); }

    friend auto operator<<(std::ostream& os, rational_t const& r) -> std::ostream&
    {
        os << r.num;
        if (r.den != 1) os << '/' << r.den;
        return os;
    }

private:
    using i128 = __int128;

    auto reduce() -> void
    {
        if (den == 0) throw std::domain_error{"rational_t: zero denominator"};
        if (den < 0) { num = -num; den = -den; }
        auto const g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static auto make(i128 n, i128 d) -> rational_t
    {
        if (d == 0) throw std::domain_error{"rational_t: zero denominator"};
        if (d < 0) { n = -n; d = -d; }
        auto const g = gcd128(n < 0 ? -n : n, d);
        n /= g;
        d /= g;
        constexpr auto lim = i128{INT64_MAX};
        if (n > lim || n < -lim || d > lim)
            throw std::overflow_error{"rational_t: 64-bit overflow after reduction"};
        auto r = rational_t{};
        r.num = static_cast<std::int64_t>(n);
        r.den = static_cast<std::int64_t>(d);
        return r;
    }

    static auto gcd128(i128 a, i128 b) -> i128
    {
        while (b != 0) {
            auto const t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }
};

/// magnitude used for norms of rational-coefficient values
inline auto coeff_norm(rational_t const& r) -> double { return std::abs(double(r)); }

} // namespace sbf

#endif // SBF_RATIONAL_HPP
