// SPDX-License-Identifier: MIT
/**
    \file
    \brief unit tests for the radial eigenvalue-coordinate weights and measure
*/
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sbf/quadrature.hpp>
#include <sbf/radial_gt.hpp>

#include <cmath>
#include <vector>

using namespace sbf;

namespace {

auto gens(std::size_t k2) -> std::vector<njet_t>
{
    auto out = std::vector<njet_t>{};
    for (std::size_t p = 0; p < k2; ++p)
        out.push_back(njet_t::generator(p, static_cast<std::uint8_t>(k2)));
    return out;
}

auto max_residual(std::vector<njet_t> const& res) -> double
{
    auto m = 0.0;
    for (auto const& r : res) m = std::max(m, value_norm(r));
    return m;
}

} // namespace

TEST_CASE("weight sum rule is exact for the 2/2 reference point")
{
    auto const s = super_spectrum_t{{0.0, 1.0}, {2.0}};
    auto const eps = gens(1);
    auto const w = gt_weights(s, {0.5}, eps);
    auto sum = njet_t{cplx{-1.0}, 1};
    for (auto const& v : w.v_sq) sum += v;
    for (auto const& a : w.alpha_sq) sum += a;
    CHECK(value_norm(sum) < 1e-14);

    auto const res = gt_residuals(w, s, {0.5}, eps);
    CHECK(res.size() == 3); // sum rule, one bosonic balance, one shift round-trip
    CHECK(max_residual(res) < 1e-13);
}

TEST_CASE("weights match the independently coded smallest-nontrivial closed forms")
{
    // k1 = 2, k2 = 2: code the products longhand, one factor at a time.
    auto const b = std::vector<double>{-0.4, 1.1};
    auto const ferm = std::vector<double>{0.6, 1.9};
    auto const x = 0.35;
    auto const s = super_spectrum_t{b, ferm};
    auto const eps = gens(2);
    auto const w = gt_weights(s, {x}, eps);

    auto const f1 = cplx{0.0, ferm[0]};
    auto const f2 = cplx{0.0, ferm[1]};
    for (std::size_t p = 0; p < 2; ++p) {
        auto const bp = b[p];
        auto const bq = b[1 - p];
        auto const num = cplx{bp - x} * std::pow(bp - f1, 2) * std::pow(bp - f2, 2);
        auto den = njet_t{cplx{bp - bq}, 2};
        den = den * ((cplx{bp} - f1 - eps[0]) * (cplx{bp} - f1 - eps[0]));
        den = den * ((cplx{bp} - f2 - eps[1]) * (cplx{bp} - f2 - eps[1]));
        auto const hand = num * inverse(den);
        CHECK(value_norm(w.v_sq[p] - hand) < 1e-13);
        CHECK(w.v_sq[p].body().real() >= 0.0);
        CHECK(w.v_sq[p].body().real() <= 1.0);
        CHECK(std::abs(w.v_sq[p].body().imag()) < 1e-15);
    }
    for (std::size_t p = 0; p < 2; ++p) {
        auto const fp = (p == 0) ? f1 : f2;
        auto const fq = (p == 0) ? f2 : f1;
        auto const num = eps[p] * (2.0 * (fp - cplx{x}) * std::pow(fp - fq, 2));
        auto den = njet_t{(fp - b[0]) * (fp - b[1]), 2};
        den = den * ((fp - fq - eps[1 - p]) * (fp - fq - eps[1 - p]));
        auto const hand = num * inverse(den);
        CHECK(value_norm(w.alpha_sq[p] - hand) < 1e-13);
        CHECK(std::abs(w.alpha_sq[p].body()) < 1e-15);
    }
}

TEST_CASE("defining-equation residuals vanish at random interlaced points")
{
    struct point_t
    {
        std::vector<double> b, f, x;
    };
    auto const points = std::vector<point_t>{
        {{0.1, 0.9, 2.3}, {0.4, 1.7}, {0.55, 1.6}},
        {{-1.2, 0.3, 1.1}, {-0.5, 0.8}, {-0.2, 0.75}},
        {{-2.0, -0.7, 0.2, 1.4}, {0.9, 2.2}, {-1.1, -0.3, 0.8}},
    };
    for (auto const& pt : points) {
        auto const s = super_spectrum_t{pt.b, pt.f};
        auto const eps = gens(s.k2());
        auto const w = gt_weights(s, pt.x, eps);
        auto const res = gt_residuals(w, s, pt.x, eps);
        CHECK(res.size() == 1 + (s.k1() - 1) + s.k2());
        CHECK(max_residual(res) < 1e-12);
    }
}

TEST_CASE("sum-rule residual responds linearly to a body perturbation")
{
    auto const s = super_spectrum_t{{0.0, 1.0}, {2.0}};
    auto const eps = gens(1);
    auto w = gt_weights(s, {0.5}, eps);
    w.v_sq[0] += njet_t{cplx{1e-3}, 1};
    auto const res = gt_residuals(w, s, {0.5}, eps);
    CHECK(value_norm(res[0] - njet_t{cplx{1e-3}, 1}) < 1e-14);
}

TEST_CASE("the 1/2 case has no bosonic balance equations")
{
    auto const s = super_spectrum_t{{0.3}, {0.9}};
    auto const eps = gens(1);
    auto const w = gt_weights(s, {}, eps);
    auto const res = gt_residuals(w, s, {}, eps);
    CHECK(res.size() == 2);
    CHECK(max_residual(res) < 1e-14);
}

TEST_CASE("shift polynomial exposes the expected first-order coefficient")
{
    // first order in the formal weight generator the root shift is c_k/2 with
    // c_k = ∏_q (f_k − s_q) / ∏_q (f_k − s′_q)
    auto const s = super_spectrum_t{{0.2, 1.4}, {0.7}};
    auto const x = 0.9;
    auto const delta = detail::gt_shift_polynomial(s, {x}, 0);
    auto const f = cplx{0.0, 0.7};
    auto const c1 = (f - 0.2) * (f - 1.4) / (f - x);
    CHECK(std::abs(coefficient(delta, {0}) - 0.5 * c1) < 1e-14);

    auto const s22 = super_spectrum_t{{-0.4, 1.1}, {0.6, 1.9}};
    auto const d2 = detail::gt_shift_polynomial(s22, {0.35}, 1);
    auto const g = cplx{0.0, 1.9};
    auto const c2 = (g + 0.4) * (g - 1.1) / (g - 0.35);
    CHECK(std::abs(coefficient(d2, {1}) - 0.5 * c2) < 1e-14);
}

TEST_CASE("weights reduce to the bosonic interlacing weights at vanishing generators")
{
    auto const s = super_spectrum_t{{0.0, 0.8, 2.1}, {1.5}};
    auto const x = std::vector<double>{0.3, 1.9};
    auto const zero = std::vector<njet_t>{njet_t{cplx{0.0}, 1}};
    auto const w = gt_weights(s, x, zero);
    for (std::size_t p = 0; p < 3; ++p) {
        auto num = 1.0;
        auto den = 1.0;
        for (auto xq : x) num *= s.bosonic[p] - xq;
        for (std::size_t q = 0; q < 3; ++q)
            if (q != p) den *= s.bosonic[p] - s.bosonic[q];
        CHECK(value_norm(w.v_sq[p] - njet_t{cplx{num / den}, 1}) < 1e-14);
    }
    CHECK(value_norm(w.alpha_sq[0]) < 1e-15);
}

TEST_CASE("degenerate spectra are rejected")
{
    auto const eps = gens(1);
    CHECK_THROWS_AS(gt_weights(super_spectrum_t{{0.5, 0.5}, {2.0}}, {0.5}, eps),
                    std::domain_error);
    CHECK_THROWS_AS(gt_weights(super_spectrum_t{{0.0, 1.0}, {2.0}}, {1.0}, eps),
                    std::domain_error);
}

TEST_CASE("one-step measure reduces to the printed coset measure for 2/2")
{
    auto const b = std::vector<double>{0.0, 2.0};
    auto const phi = 1.3;
    auto const s = super_spectrum_t{b, {phi}};
    auto const x = 0.8;
    auto const e = njet_t::generator(0, 1);
    auto const f = cplx{0.0, phi};
    auto const fp = e + f; // inner fermionic eigenvalue
    auto const m = radial_measure({x}, std::vector<njet_t>{fp}, s);
    CHECK(m.prefactor == 4.0);

    auto const direct = (f - x) * (fp - b[0]) * (fp - b[1])
                        * inverse((fp - x) * (fp - x))
                        * (1.0 / std::sqrt(-(x - b[0]) * (x - b[1])));
    auto const product = m.mu_B * m.mu_F * m.mu_BF;
    CHECK(value_norm(product - direct) < 1e-13);
}

TEST_CASE("single bosonic eigenvalue gives unit bosonic measure factor")
{
    auto const s = super_spectrum_t{{0.5}, {1.0, 2.0}};
    auto const eps = gens(2);
    auto const fp = std::vector<njet_t>{eps[0] + s.f(0), eps[1] + s.f(1)};
    auto const m = radial_measure({}, fp, s);
    CHECK(m.mu_B == 1.0);
    // with no inner bosonic eigenvalues, the mixing factor is ∏_l ∏_p (f′_l − s_p)
    auto const direct = (fp[0] - 0.5) * (fp[1] - 0.5);
    CHECK(value_norm(m.mu_BF - direct) < 1e-14);
}

TEST_CASE("factored measure equals direct transcription and integrates cleanly")
{
    auto const b = std::vector<double>{-0.6, 0.5, 1.8};
    auto const ferm = std::vector<double>{0.3, 1.2};
    auto const s = super_spectrum_t{b, ferm};
    auto const eps = gens(2);

    auto direct_measure = [&](std::vector<double> const& x) -> njet_t {
        auto const f1 = s.f(0);
        auto const f2 = s.f(1);
        auto const fp = std::vector<njet_t>{eps[0] + f1, eps[1] + f2};
        // bosonic: Vandermonde of inner over sqrt of all pair gaps
        auto radicand = 1.0;
        for (auto bp : b)
            for (auto xq : x) radicand *= bp - xq;
        auto num = njet_t{cplx{(x[1] - x[0]) / std::sqrt(std::abs(radicand))}, 2};
        // fermionic: fourth power of the inner gap over the p ≠ q squared gaps
        auto const gap = fp[1] - fp[0];
        num = num * (gap * gap * gap * gap);
        num = num * inverse((f1 - fp[1]) * (f1 - fp[1]) * (f2 - fp[0]) * (f2 - fp[0]));
        // mixing: ∏_l [∏_p (f′_l − s_p) ∏_q (f_l − x_q)] / ∏_l ∏_q (f′_l − x_q)²
        for (std::size_t l = 0; l < 2; ++l) {
            auto const fl = (l == 0) ? f1 : f2;
            for (auto bp : b) num = num * (fp[l] - bp);
            for (auto xq : x) num = num * (fl - xq);
            for (auto xq : x) num = num * inverse((fp[l] - xq) * (fp[l] - xq));
        }
        return num;
    };

    auto const pts = std::vector<std::vector<double>>{
        {-0.1, 1.0}, {0.2, 0.7}, {-0.55, 1.75}};
    for (auto const& x : pts) {
        auto const fp = std::vector<njet_t>{eps[0] + s.f(0), eps[1] + s.f(1)};
        auto const m = radial_measure(x, fp, s);
        auto const product = m.mu_B * m.mu_F * m.mu_BF;
        auto const direct = direct_measure(x);
        CHECK(value_norm(product - direct) < 1e-12 * value_norm(direct));
    }

    auto cfg = quadrature_config_t{};
    cfg.rel_tol = 1e-8;
    auto integrand = [&](std::vector<double> const& x) {
        auto const fp = std::vector<njet_t>{eps[0] + s.f(0), eps[1] + s.f(1)};
        auto const m = radial_measure(x, fp, s);
        return m.mu_B * m.mu_F * m.mu_BF * std::exp(x[0] + x[1]);
    };
    auto const ir = integrate_interlaced<njet_t>(integrand, b, cfg);
    CHECK(ir.converged);
    CHECK(std::isfinite(ir.value.body().real()));
    CHECK(value_norm(ir.value) > 0.0);
}

TEST_CASE("bosonic measure factor blows up with inverse square-root scaling")
{
    auto const s = super_spectrum_t{{0.0, 2.0}, {1.3}};
    auto const e = njet_t::generator(0, 1);
    auto const fp = std::vector<njet_t>{e + s.f(0)};
    auto mu_at = [&](double d) {
        return radial_measure({d}, fp, s).mu_B;
    };
    auto const ratio = mu_at(1e-4 / 4.0) / mu_at(1e-4);
    CHECK(std::abs(ratio - 2.0) < 0.02);
}

TEST_CASE("interlacing violations are rejected")
{
    auto const s = super_spectrum_t{{0.0, 1.0}, {2.0}};
    auto const e = njet_t::generator(0, 1);
    auto const fp = std::vector<njet_t>{e + s.f(0)};
    CHECK_THROWS_AS(radial_measure({1.5}, fp, s), std::domain_error);
    CHECK_THROWS_AS(radial_measure({-0.5}, fp, s), std::domain_error);
}
