// SPDX-License-Identifier: MIT
/**
    \file
    \brief unit tests for the nilpotent-generator algebra and its analytic jets
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sbf/nilpotent.hpp>

#include <cmath>
#include <random>

using namespace sbf;

namespace {

auto eps(std::size_t p, std::uint8_t n = 2) -> njet_t { return njet_t::generator(p, n); }
[[maybe_unused]] auto qeps(std::size_t p, std::uint8_t n) -> qjet_t
{
    return qjet_t::generator(p, n);
}

} // namespace

TEST_CASE("addition is coefficient-wise")
{
    auto const a = njet_t{1.0, 2} + 2.0 * eps(0);
    auto const b = njet_t{3.0, 2} + eps(1);
    auto const sum = a + b;
    CHECK(sum.body() == cplx{4.0});
    CHECK(coefficient(sum, {0}) == cplx{2.0});
    CHECK(coefficient(sum, {1}) == cplx{1.0});
    CHECK(coefficient(sum, {0, 1}) == cplx{0.0});

    CHECK(a + njet_t{} == a); // identity

    auto const c = njet_t{1.0, 2} + eps(0) * eps(1);
    CHECK((c + (-c)).is_zero()); // inverse
}

TEST_CASE("multiplication drops repeated generators")
{
    auto const a = cplx{2.0};
    auto const b = cplx{3.0};
    auto const c = cplx{5.0};
    auto const d = cplx{7.0};
    auto const p = (njet_t{a, 2} + b * eps(0)) * (njet_t{c, 2} + d * eps(0));
    CHECK(p.body() == a * c);
    CHECK(coefficient(p, {0}) == a * d + b * c); // ε₀² = 0 kills the bd term
    CHECK(coefficient(p, {1}) == cplx{});

    auto const q = (njet_t{1.0, 2} + eps(0)) * (njet_t{1.0, 2} + eps(1));
    CHECK(q.body() == cplx{1.0});
    CHECK(coefficient(q, {0}) == cplx{1.0});
    CHECK(coefficient(q, {1}) == cplx{1.0});
    CHECK(coefficient(q, {0, 1}) == cplx{1.0});

    CHECK((eps(0) * eps(1) * eps(0)).is_zero()); // nilpotency
}

TEST_CASE("universe mismatch is a configuration error")
{
    auto const a = njet_t::generator(0, 2);
    auto const b = njet_t::generator(0, 3);
    CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
    CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
    CHECK_NOTHROW((void)(a + njet_t{1.0})); // scalars promote into any universe
}

TEST_CASE("analytic composition is the exact truncated Taylor sum")
{
    auto const c = cplx{0.7, 0.0};

    auto const e = exp(njet_t{c, 2} + eps(0));
    CHECK(std::abs(e.body() - std::exp(c)) < 1e-15);
    CHECK(std::abs(coefficient(e, {0}) - std::exp(c)) < 1e-15);

    auto const s = sqrt(njet_t{4.0, 2} + eps(0));
    CHECK(std::abs(s.body() - 2.0) < 1e-15);
    CHECK(std::abs(coefficient(s, {0}) - cplx{0.25}) < 1e-15); // d√x = 1/(2√x)

    // (ε₀+ε₁)² = 2ε₀ε₁, so the second derivative appears on the pair coefficient
    auto const f = exp(njet_t{c, 2} + eps(0) + eps(1));
    CHECK(std::abs(coefficient(f, {0}) - std::exp(c)) < 1e-15);
    CHECK(std::abs(coefficient(f, {1}) - std::exp(c)) < 1e-15);
    CHECK(std::abs(coefficient(f, {0, 1}) - std::exp(c)) < 1e-15);
}

TEST_CASE("berezin_pair extracts the generator slice with sign +1")
{
    auto const a = cplx{2.0};
    auto const b = cplx{3.0};
    auto const c = cplx{5.0};
    auto const d = cplx{7.0};
    auto const x = njet_t{a, 2} + b * eps(0) + c * eps(1) + d * eps(0) * eps(1);

    auto const slice0 = berezin_pair(x, 0);
    CHECK(slice0.body() == b);
    CHECK(coefficient(slice0, {1}) == d);
    CHECK(coefficient(slice0, {0}) == cplx{});

    CHECK(berezin_pair(njet_t{a, 2}, 0).is_zero());

    // berezin_pair(x·ε_p, p) = x with its own ε_p terms removed
    auto const y = berezin_pair(x * eps(1), 1);
    CHECK(y.body() == a);
    CHECK(coefficient(y, {0}) == b);
    CHECK(coefficient(y, {1}) == cplx{});
}

TEST_CASE("exact quotient by a generator")
{
    auto const x = (njet_t{3.0, 2} + 5.0 * eps(1)) * eps(0);
    auto const q = divide_by_generator(x, 0);
    CHECK(q.body() == cplx{3.0});
    CHECK(coefficient(q, {1}) == cplx{5.0});
    CHECK_THROWS_AS((void)divide_by_generator(njet_t{1.0, 2} + eps(0), 0),
                    std::domain_error);
}

TEST_CASE("ring axioms hold exactly on rational coefficients")
{
    auto rng = std::mt19937_64{12345};
    auto coin = std::uniform_int_distribution<std::int64_t>{-9, 9};
    auto random_value = [&] {
        auto v = qjet_t{rational_t{coin(rng), 1 + std::abs(coin(rng))}, 3};
        for (std::size_t p = 0; p < 3; ++p)
            v += qjet_t::generator(p, 3) * rational_t{coin(rng), 1 + std::abs(coin(rng))};
        return v;
    };
    for (int i = 0; i < 50; ++i) {
        auto const x = random_value();
        auto const y = random_value();
        auto const z = random_value();
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * y == y * x);
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("exp is a homomorphism on jets")
{
    auto const x = njet_t{cplx{0.3, 0.1}, 3} + cplx{0.5} * njet_t::generator(0, 3) +
                   cplx{0.2} * njet_t::generator(1, 3);
    auto const y = njet_t{cplx{-0.4, 0.2}, 3} + cplx{1.5} * njet_t::generator(1, 3) +
                   cplx{0.7} * njet_t::generator(2, 3);
    CHECK(value_norm(exp(x + y) - exp(x) * exp(y)) < 1e-14);
}

TEST_CASE("jet derivative matches a central finite difference")
{
    auto const c = 0.8;
    auto const h = 1e-5;
    auto f = [](njet_t const& x) { return exp(x * x) * inverse(x + 2.0); };
    auto fd = [&](double t) {
        return std::exp(t * t) / (t + 2.0);
    };
    auto const jet = f(njet_t{c, 1} + njet_t::generator(0, 1));
    auto const diff = (fd(c + h) - fd(c - h)) / (2.0 * h);
    CHECK(std::abs(coefficient(jet, {0}).real() - diff) < 1e-6 * std::abs(diff));
}

TEST_CASE("modified Bessel ladder differentiates correctly")
{
    auto const c = 1.3;
    auto const jet = cyl_bessel_i(0, njet_t{c, 2} + eps(0) + eps(1));
    // I₀′ = I₁ and I₀″ = (I₀ + I₂)/2
    CHECK(std::abs(coefficient(jet, {0}).real() - cyl_bessel_i(1, c)) < 1e-14);
    auto const second = 0.5 * (cyl_bessel_i(0, c) + cyl_bessel_i(2, c));
    CHECK(std::abs(coefficient(jet, {0, 1}).real() - second) < 1e-14);

    // parity and complex series agree with the real implementation near the axis
    CHECK(cyl_bessel_i(1, -2.0) == -cyl_bessel_i(1, 2.0));
    auto const zs = cyl_bessel_i(2, cplx{1.7, 1e-30});
    CHECK(std::abs(zs - cplx{cyl_bessel_i(2, 1.7)}) < 1e-12);
}

TEST_CASE("rational arithmetic reduces and detects overflow")
{
    CHECK(rational_t{2, 4} == rational_t{1, 2});
    CHECK(rational_t{1, 3} + rational_t{1, 6} == rational_t{1, 2});
    CHECK(rational_t{-3, -9} == rational_t{1, 3});
    CHECK(rational_t{7, 3} * rational_t{3, 7} == rational_t{1});
    CHECK_THROWS_AS((void)(rational_t{INT64_MAX, 1} * rational_t{INT64_MAX, 1}),
                    std::overflow_error);
    CHECK_THROWS_AS((void)(rational_t{1, 1} / rational_t{0, 1}), std::domain_error);
}
