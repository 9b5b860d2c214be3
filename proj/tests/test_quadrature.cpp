// SPDX-License-Identifier: MIT
/**
    \file
    \brief unit tests for the singular/oscillatory quadrature and MC primitives
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sbf/quadrature.hpp>

#include <cmath>
#include <complex>
#include <vector>

using namespace sbf;

namespace {

auto const pi = 3.14159265358979323846;

/// composite Simpson rule on [a, b] with n (even) intervals
template <typename f_t>
auto simpson(f_t&& f, double a, double b, std::size_t n) -> cplx
{
    auto const h = (b - a) / double(n);
    auto acc = f(a) + f(b);
    for (std::size_t i = 1; i < n; ++i)
        acc += f(a + h * double(i)) * ((i % 2 == 1) ? 4.0 : 2.0);
    return acc * (h / 3.0);
}

} // namespace

TEST_CASE("interlaced quadrature reproduces the arcsine integral")
{
    auto cfg = quadrature_config_t{};
    auto f = [](std::vector<double> const& x) {
        return cplx{1.0 / std::sqrt(x[0] * (1.0 - x[0]))};
    };
    auto const r = integrate_interlaced<cplx>(f, {0.0, 1.0}, cfg);
    CHECK(std::abs(r.value - pi) < 1e-10);
    CHECK(r.converged);

    auto one = [](std::vector<double> const&) { return cplx{1.0}; };
    auto const u = integrate_interlaced<cplx>(one, {0.0, 1.0}, cfg);
    CHECK(std::abs(u.value - 1.0) < 1e-12);
}

TEST_CASE("eigenvalue-measure weight against dense substituted trapezoid oracle")
{
    // weight 1/√((x−a)(b−x)) on (0,1) against f = exp: the substitution
    // x = sin²θ turns the integrand into exactly 2·exp(sin²θ).
    auto cfg = quadrature_config_t{};
    auto f = [](std::vector<double> const& x) {
        return cplx{std::exp(x[0]) / std::sqrt(x[0] * (1.0 - x[0]))};
    };
    auto const r = integrate_interlaced<cplx>(f, {0.0, 1.0}, cfg);

    // dense-grid oracle: 10⁶-interval trapezoid rule in the substituted variable
    auto const n = std::size_t{1000000};
    auto const h = (pi / 2.0) / double(n);
    auto oracle = 0.0;
    for (std::size_t i = 0; i <= n; ++i) {
        auto const theta = h * double(i);
        auto const g = 2.0 * std::exp(std::sin(theta) * std::sin(theta));
        oracle += (i == 0 || i == n) ? 0.5 * g : g;
    }
    oracle *= h;
    CHECK(std::abs(r.value - oracle) < 1e-8);

    // independent closed form: π·√e·I₀(1/2)
    auto const closed = pi * std::exp(0.5) * std::cyl_bessel_i(0, 0.5);
    CHECK(std::abs(r.value - closed) < 1e-9);

    // tightening rel_tol must not worsen the oracle discrepancy
    auto loose = cfg;
    loose.rel_tol = 1e-6;
    auto tight = cfg;
    tight.rel_tol = 5e-7;
    auto const d_loose =
        std::abs(integrate_interlaced<cplx>(f, {0.0, 1.0}, loose).value - oracle);
    auto const d_tight =
        std::abs(integrate_interlaced<cplx>(f, {0.0, 1.0}, tight).value - oracle);
    CHECK(d_tight <= d_loose + 1e-12);

    // the substituted integrand stays finite on the faces θ = 0 and θ = π/2
    auto substituted = [&](double theta) {
        auto const x = std::sin(theta) * std::sin(theta);
        auto const w = (x <= 0.0 || x >= 1.0)
                           ? 2.0 // limiting value of f(x)·sin(2θ) at the faces
                           : std::exp(x) / std::sqrt(x * (1.0 - x)) * std::sin(2.0 * theta);
        return w;
    };
    CHECK(std::isfinite(substituted(0.0)));
    CHECK(std::isfinite(substituted(pi / 2.0)));
}

TEST_CASE("two nested interlaced levels factorize on separable integrands")
{
    auto cfg = quadrature_config_t{};
    auto f = [](std::vector<double> const& x) {
        return cplx{1.0
                    / std::sqrt(x[0] * (1.0 - x[0]) * (x[1] - 1.0) * (2.0 - x[1]))};
    };
    auto const r = integrate_interlaced<cplx>(f, {0.0, 1.0, 2.0}, cfg);
    CHECK(std::abs(r.value - pi * pi) < 1e-8);
}

TEST_CASE("interlaced quadrature rejects bad outer spectra and reports divergence")
{
    auto cfg = quadrature_config_t{};
    auto one = [](std::vector<double> const&) { return cplx{1.0}; };
    CHECK_THROWS_AS((integrate_interlaced<cplx>(one, {}, cfg)), std::invalid_argument);
    CHECK_THROWS_AS((integrate_interlaced<cplx>(one, {1.0, 1.0}, cfg)),
                    std::invalid_argument);

    auto hard = quadrature_config_t{};
    hard.max_subdivisions = 5;
    hard.rel_tol = 1e-14;
    hard.abs_tol = 1e-15;
    auto spike = [](std::vector<double> const& x) {
        return cplx{1.0 / std::sqrt(std::abs(x[0] - 0.4352))};
    };
    CHECK_THROWS_AS((integrate_interlaced<cplx>(spike, {0.0, 1.0}, hard)),
                    accuracy_error);
}

TEST_CASE("nilpotent-valued integrands are integrated coefficient-wise")
{
    // ∫₀¹ exp(x(1+ε)) dx = (e−1) + ε·∫₀¹ x eˣ dx = (e−1) + ε·1
    auto cfg = quadrature_config_t{};
    auto f = [](std::vector<double> const& x) {
        auto const arg = njet_t{cplx{x[0]}, 1} + njet_t::generator(0, 1) * cplx{x[0]};
        return exp(arg);
    };
    auto const r = integrate_interlaced<njet_t>(f, {0.0, 1.0}, cfg);
    CHECK(std::abs(r.value.body() - (std::exp(1.0) - 1.0)) < 1e-10);
    CHECK(std::abs(coefficient(r.value, {0}) - cplx{1.0}) < 1e-10);
}

TEST_CASE("real-line quadrature handles algebraic and oscillatory tails")
{
    auto cfg = quadrature_config_t{};
    cfg.abs_tol = 1e-9;
    cfg.tail_cutoff = 4e9;
    auto lorentz = [](double t) { return cplx{1.0 / (1.0 + t * t)}; };
    auto const r1 = integrate_line<cplx>(lorentz, 2.0, cfg);
    CHECK(std::abs(r1.value - pi) < 1e-8);
    CHECK(r1.converged);

    auto osc_cfg = quadrature_config_t{};
    osc_cfg.abs_tol = 1e-9;
    osc_cfg.max_subdivisions = 200000;
    osc_cfg.tail_cutoff = 1e7;
    auto fourier = [](double t) {
        return std::exp(cplx{0.0, t}) / cplx{1.0 + t * t};
    };
    auto const r2 = integrate_line<cplx>(fourier, 2.0, osc_cfg);
    CHECK(std::abs(r2.value - pi / std::exp(1.0)) < 1e-8);

    CHECK_THROWS_AS((integrate_line<cplx>(lorentz, 1.2, cfg)), std::domain_error);
}

TEST_CASE("inverse-square-root product with oscillation matches dense-grid oracle")
{
    auto const s = std::vector<double>{1.0, 2.0, 3.0};
    auto h = [&](cplx t) {
        auto prod = cplx{1.0};
        for (auto sj : s) prod *= std::sqrt(cplx{sj} - cplx{0.0, 1.0} * t);
        return 1.0 / prod;
    };
    auto f = [&](double t) { return std::exp(cplx{0.0, 0.7 * t}) * h(cplx{t}); };

    auto cfg = quadrature_config_t{};
    cfg.abs_tol = 1e-9;
    cfg.max_subdivisions = 200000;
    cfg.tail_cutoff = 1e7;
    auto const r = integrate_line<cplx>(f, 1.5, cfg);

    // Oracle: 10⁷-interval Simpson panel on [0, T] (the t < 0 half is the
    // conjugate), plus the upper-half-plane rotated tail
    //   ∫_T^∞ e^{0.7it} h(t) dt = i·e^{0.7iT} ∫_0^∞ e^{−0.7u} h(T+iu) du,
    // where the rotated integrand decays exponentially.
    auto const T = 300000.0;
    auto const core = simpson([&](double t) { return f(t); }, 0.0, T, 10000000);
    auto tail_f = [&](double u) {
        return std::exp(-0.7 * u) * h(cplx{T, u});
    };
    auto const tail = cplx{0.0, 1.0} * std::exp(cplx{0.0, 0.7 * T})
                      * simpson(tail_f, 0.0, 100.0, 20000);
    auto const oracle = 2.0 * (core + tail).real();
    CHECK(std::abs(r.value - oracle) < 1e-8);
}

TEST_CASE("Monte-Carlo mean is deterministic and matches trivial averages")
{
    auto angle = [](std::mt19937_64& rng) {
        return std::uniform_real_distribution<double>{0.0, 2.0 * pi}(rng);
    };
    auto const ones =
        mc_mean(angle, [](double) { return cplx{1.0}; }, 1000, 42);
    CHECK(ones.mean == cplx{1.0});
    CHECK(ones.std_error == 0.0);

    // first matrix entry of a planar rotation, squared: E[cos²θ] = 1/2
    auto cos_sq = [](double th) { return cplx{std::cos(th) * std::cos(th)}; };
    auto const a = mc_mean(angle, cos_sq, 200000, 7);
    auto const b = mc_mean(angle, cos_sq, 200000, 7);
    CHECK(a.mean == b.mean);
    CHECK(a.std_error == b.std_error);
    CHECK(std::abs(a.mean - cplx{0.5}) < 3.0 * a.std_error);
    CHECK_THROWS_AS(mc_mean(angle, cos_sq, 1, 7), std::invalid_argument);
}
