// SPDX-License-Identifier: MIT
/**
    \file
    \brief closed-form supermatrix Bessel functions on UOSp(k₁/2k₂)

    The k₂ = 2 evaluators share one skeleton: a sum over the two pairings of
    the fermionic doublets of r, each pairing contributing an exponential in
    the paired eigenvalue products, inverse powers of the fermionic gaps, a
    product of one "bracket" per fermionic pair, and correction terms from
    the non-commutativity of the underlying eigenvalue-derivative operators.
    Arrowed operator products are normal-ordered: every derivative acts
    directly on the innermost kernel function, never on the polynomial
    coefficients of the other factors.

    Each evaluator is implemented once over jet-valued fermionic arguments
    (nilpotent_spectrum_t); the plain overloads lift their spectra to
    soul-free jets and take the body.  Bosonic gap variables — in particular
    z and the Bessel factors I₀(z/2), I₁(z/2) — are fermion-independent and
    stay real scalars.
*/
#include <sbf/bessel.hpp>
#include <sbf/ordinary.hpp>

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbf {

namespace {

    constexpr auto pi = std::numbers::pi;

    /// the two pairings of the fermionic doublets of s and r
    constexpr auto pairings = std::array<std::array<std::size_t, 2>, 2>{{{0, 1}, {1, 0}}};

    auto factorial(int n) -> double
    {
        auto f = 1.0;
        for (int i = 2; i <= n; ++i) f *= double(i);
        return f;
    }

    auto require_shape(nilpotent_spectrum_t const& s, super_spectrum_t const& r,
                       std::size_t k1, std::size_t k2, char const* who) -> void
    {
        if (s.k1() != k1 || s.k2() != k2 || r.k1() != k1 || r.k2() != k2)
            throw std::invalid_argument{std::string{who} + ": dimension mismatch"};
    }

    auto require_distinct_fermions(nilpotent_spectrum_t const& s, char const* who) -> void
    {
        for (std::size_t p = 0; p < s.k2(); ++p)
            for (std::size_t q = p + 1; q < s.k2(); ++q)
                if (s.fermionic[p].body() == s.fermionic[q].body())
                    throw std::domain_error{std::string{who}
                                            + ": coincident fermionic eigenvalues"};
    }

    auto require_distinct_fermions(super_spectrum_t const& r, char const* who) -> void
    {
        for (std::size_t p = 0; p < r.k2(); ++p)
            for (std::size_t q = p + 1; q < r.k2(); ++q)
                if (r.fermionic[p] == r.fermionic[q])
                    throw std::domain_error{std::string{who}
                                            + ": coincident fermionic eigenvalues"};
    }

    /// exp argument of the paired fermionic sector, 2 Σ_p s_{p2} r_{σ(p)2}
    auto paired_fermions(nilpotent_spectrum_t const& s, super_spectrum_t const& r,
                         std::array<std::size_t, 2> const& sig) -> njet_t
    {
        return s.fermionic[0] * (2.0 * r.fermionic[sig[0]])
               + s.fermionic[1] * (2.0 * r.fermionic[sig[1]]);
    }

    /// single and doubled bosonic entries of a twofold-degenerate pattern
    auto split_degenerate_bosons(super_spectrum_t const& r, char const* who)
        -> std::pair<double, double>
    {
        auto const& b = r.bosonic;
        if (b.size() == 3) {
            if (b[1] == b[2] && b[0] != b[1]) return {b[0], b[1]};
            if (b[0] == b[1] && b[1] != b[2]) return {b[2], b[0]};
        } else if (b.size() == 4) {
            if (b[0] == b[1] && b[2] == b[3] && b[1] != b[2]) return {b[0], b[2]};
        }
        throw std::domain_error{std::string{who} + ": bosonic r-eigenvalues must form "
                                                   "one simple and one twofold value"};
    }

    /// value with exact first and second bosonic derivatives of a kernel function
    struct jet_table_t
    {
        cplx val{};
        std::vector<cplx> d1;
        std::vector<std::vector<cplx>> d2;
    };

    template <typename Eval>
    auto make_jet_table(std::vector<double> const& b, Eval&& eval) -> jet_table_t
    {
        auto const k = b.size();
        auto t = jet_table_t{};
        t.d1.assign(k, cplx{});
        t.d2.assign(k, std::vector<cplx>(k, cplx{}));
        {
            auto args = std::vector<njet_t>{};
            for (std::size_t j = 0; j < k; ++j)
                args.push_back(njet_t{cplx{b[j]}} + njet_t::generator(j, std::uint8_t(k)));
            auto const w = eval(args);
            t.val = w.body();
            for (std::size_t j = 0; j < k; ++j) t.d1[j] = w.coefficient(1u << j);
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t l = j + 1; l < k; ++l)
                    t.d2[j][l] = t.d2[l][j] = w.coefficient((1u << j) | (1u << l));
        }
        for (std::size_t j = 0; j < k; ++j) {
            auto args = std::vector<njet_t>{};
            for (std::size_t l = 0; l < k; ++l) {
                auto a = njet_t{cplx{b[l]}};
                if (l == j) a = a + njet_t::generator(0, 2) + njet_t::generator(1, 2);
                args.push_back(a);
            }
            t.d2[j][j] = eval(args).coefficient(3u);
        }
        return t;
    }

    /// first-order operator c·1 + Σ_k d_k ∂/∂b_k associated with one fermionic pair
    struct pair_operator_t
    {
        njet_t c{};
        std::vector<njet_t> d;
    };

    /**
        \brief bracket of one fermionic pair in the k₂ = 2 operator forms:
        w(r₁₁−ρ)(r₂₁−ρ)∏_j(b_j−f) + (w/2)Σ_k ∏_{j≠k}(b_j−f)(r₁₁+r₂₁−ρ−∂_k),
        with w = 4 for k₁ = 3 and w = 8 for k₁ = 4.
    */
    auto pair_operator(std::vector<double> const& b, double r11, double r21,
                       njet_t const& f, cplx rho, double w) -> pair_operator_t
    {
        auto const k = b.size();
        auto full = njet_t{cplx{1.0}};
        for (auto const bj : b) full *= bj - f;
        auto miss = std::vector<njet_t>(k, njet_t{cplx{1.0}});
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (j != i) miss[i] *= b[j] - f;
        auto op = pair_operator_t{};
        auto sum_miss = njet_t{};
        for (auto const& m : miss) sum_miss += m;
        op.c = (w * (r11 - rho) * (r21 - rho)) * full
               + ((w / 2) * (r11 + r21 - rho)) * sum_miss;
        op.d.assign(k, njet_t{});
        for (std::size_t i = 0; i < k; ++i) op.d[i] = miss[i] * (-(w / 2));
        return op;
    }

    /// normal-ordered product of two pair operators applied to the kernel table
    auto apply_pair_product(pair_operator_t const& p1, pair_operator_t const& p2,
                            jet_table_t const& t) -> njet_t
    {
        auto acc = p1.c * p2.c * t.val;
        auto const k = t.d1.size();
        for (std::size_t l = 0; l < k; ++l) acc += p1.c * p2.d[l] * t.d1[l];
        for (std::size_t j = 0; j < k; ++j) acc += p1.d[j] * p2.c * t.d1[j];
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t l = 0; l < k; ++l) acc += p1.d[j] * p2.d[l] * t.d2[j][l];
        return acc;
    }

    /// ∏_{j≠i}(b_j − f) for every i
    auto missing_products(std::vector<double> const& b, njet_t const& f)
        -> std::vector<njet_t>
    {
        auto miss = std::vector<njet_t>(b.size(), njet_t{cplx{1.0}});
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                if (j != i) miss[i] *= b[j] - f;
        return miss;
    }

    // ---- rank-(3,2) closed form: exact rational calculus ----
    //
    // The rank-(3,2) evaluator writes the function as a bilinear form in
    // per-gap integral objects.  Over each gap (b_c, b_{c+1}) of the sorted
    // bosonic eigenvalues define, with weight w(x) = |∏_p (x − b_p)|^{−1/2}
    // and ω the offset of the doubled from the simple bosonic r-eigenvalue,
    //     M_k = ∫ x^k e^{ωx} w(x) dx           (k = 0, 1, 2),
    //     N_l = ∫ e^{ωx} w(x) / (f_l − x) dx   (l = 0, 1).
    // The two-variable rational function produced by the fermionic
    // contraction of one recursion layer is expanded exactly in a fixed
    // univariate basis per variable; integrating the total derivative
    // d/dx[√|P(x)| e^{ωx} · rational], which vanishes over a full gap,
    // closes the basis onto the five objects above, so the value becomes
    // Σ_pairings e^{paired} Σ_{a,b} Θ_ab O_a(gap 0) O_b(gap 1) with exactly
    // computed jet coefficients Θ.

    /// univariate basis slots: 0..5 ↦ x^k; 6,7 ↦ (f₀−x)^{−1,−2}; 8,9 ↦ (f₁−x)^{−1,−2}
    constexpr int rat_n = 10;

    constexpr auto pole_slot(int l, int o) -> int { return 6 + 2 * l + (o - 1); }

    /// dense univariate expansion with a bitmask of occupied slots
    struct rat_vec_t
    {
        std::array<njet_t, rat_n> c{};
        unsigned used{};

        auto add(int i, njet_t const& v) -> void
        {
            c[i] += v;
            used |= 1u << i;
        }
    };

    template <typename scalar_t>
    auto rat_axpy(rat_vec_t& y, scalar_t const& a, rat_vec_t const& x) -> void
    {
        for (int i = 0; i < rat_n; ++i)
            if (x.used >> i & 1u) y.add(i, a * x.c[i]);
    }

    /// closed multiplication table β_i·β_j = Σ_k coef_k β_k for one pole pair
    struct rat_calculus_t
    {
        std::array<njet_t, 2> f;
        std::array<std::array<njet_t, 6>, 2> fpow;
        std::array<std::array<rat_vec_t, rat_n>, rat_n> prod;
        std::array<std::array<bool, rat_n>, rat_n> closed{};

        rat_calculus_t(njet_t const& f0, njet_t const& f1) : f{f0, f1}
        {
            auto const one = njet_t{cplx{1.0}};
            for (int l = 0; l < 2; ++l) {
                fpow[l][0] = one;
                for (int k = 1; k < 6; ++k) fpow[l][k] = fpow[l][k - 1] * f[l];
            }
            // cross-location partial fractions pf[j][k] ≙ (f₀−x)^{−j}(f₁−x)^{−k}
            auto const inv_gap = inverse(f1 - f0);
            auto pf = std::array<std::array<rat_vec_t, 3>, 3>{};
            pf[1][0].add(pole_slot(0, 1), one);
            pf[2][0].add(pole_slot(0, 2), one);
            pf[0][1].add(pole_slot(1, 1), one);
            pf[0][2].add(pole_slot(1, 2), one);
            for (int j = 1; j <= 2; ++j)
                for (int k = 1; k <= 2; ++k) {
                    auto acc = rat_vec_t{};
                    rat_axpy(acc, inv_gap, pf[j][k - 1]);
                    rat_axpy(acc, -inv_gap, pf[j - 1][k]);
                    pf[j][k] = acc;
                }
            for (int i = 0; i < rat_n; ++i)
                for (int j = 0; j < rat_n; ++j) {
                    auto& out = prod[i][j];
                    if (i <= 5 && j <= 5) {
                        if (i + j > 5) continue; // degree overflow: slot stays open
                        out.add(i + j, one);
                    } else if (i <= 5 || j <= 5) {
                        auto const k = std::min(i, j);
                        auto const p = std::max(i, j);
                        out = mono_over_pole((p - 6) / 2, k, (p - 6) % 2 + 1);
                    } else {
                        auto const la = (i - 6) / 2, oa = (i - 6) % 2 + 1;
                        auto const lb = (j - 6) / 2, ob = (j - 6) % 2 + 1;
                        if (la == lb) {
                            if (oa + ob > 2) continue; // order overflow: slot stays open
                            out.add(pole_slot(la, oa + ob), one);
                        } else {
                            out = (la == 0) ? pf[oa][ob] : pf[ob][oa];
                        }
                    }
                    closed[i][j] = true;
                }
        }

        /// x^k (f_l − x)^{−o} via x^k = f^k − (f − x) Σ_{m<k} f^{k−1−m} x^m
        auto mono_over_pole(int l, int k, int o) const -> rat_vec_t
        {
            auto out = rat_vec_t{};
            if (o == 0) {
                out.add(k, njet_t{cplx{1.0}});
                return out;
            }
            out.add(pole_slot(l, o), fpow[l][k]);
            for (int m = 0; m < k; ++m)
                rat_axpy(out, -fpow[l][k - 1 - m], mono_over_pole(l, m, o - 1));
            return out;
        }
    };

    /// two-variable expansion Σ T(i,j) β_i(x₁) β_j(x₂)
    struct biv_t
    {
        std::array<std::array<njet_t, rat_n>, rat_n> t{};
        std::array<unsigned, rat_n> used{};

        auto add(int i, int j, njet_t const& v) -> void
        {
            t[i][j] += v;
            used[i] |= 1u << j;
        }
    };

    template <typename scalar_t>
    auto biv_axpy(biv_t& y, scalar_t const& a, biv_t const& x) -> void
    {
        for (int i = 0; i < rat_n; ++i)
            for (int j = 0; j < rat_n; ++j)
                if (x.used[i] >> j & 1u) y.add(i, j, a * x.t[i][j]);
    }

    auto biv_mul(rat_calculus_t const& rc, biv_t const& a, biv_t const& b) -> biv_t
    {
        auto out = biv_t{};
        for (int i1 = 0; i1 < rat_n; ++i1)
            for (int j1 = 0; j1 < rat_n; ++j1) {
                if (!(a.used[i1] >> j1 & 1u)) continue;
                for (int i2 = 0; i2 < rat_n; ++i2)
                    for (int j2 = 0; j2 < rat_n; ++j2) {
                        if (!(b.used[i2] >> j2 & 1u)) continue;
                        if (!rc.closed[i1][i2] || !rc.closed[j1][j2])
                            throw std::logic_error{"phi_34: rational basis overflow"};
                        auto const coef = a.t[i1][j1] * b.t[i2][j2];
                        auto const& px = rc.prod[i1][i2];
                        auto const& py = rc.prod[j1][j2];
                        for (int ix = 0; ix < rat_n; ++ix) {
                            if (!(px.used >> ix & 1u)) continue;
                            auto const cx = coef * px.c[ix];
                            for (int iy = 0; iy < rat_n; ++iy)
                                if (py.used >> iy & 1u) out.add(ix, iy, cx * py.c[iy]);
                        }
                    }
            }
        return out;
    }

    /// expansion of x·β_idx back in the basis
    auto shift_terms(int idx, std::array<njet_t, 2> const& f)
        -> std::vector<std::pair<int, njet_t>>
    {
        if (idx <= 4) return {{idx + 1, njet_t{cplx{1.0}}}};
        if (idx >= 6) {
            // x/(f−x) = f/(f−x) − 1 and x/(f−x)² = f/(f−x)² − 1/(f−x)
            auto const lower = (idx - 6) % 2 == 0 ? 0 : idx - 1;
            return {{idx, f[(idx - 6) / 2]}, {lower, njet_t{cplx{-1.0}}}};
        }
        throw std::logic_error{"phi_34: monomial shift overflow"};
    }

    /// coordinates in the five gap objects (M₀, M₁, M₂, N₀, N₁)
    using red5_t = std::array<njet_t, 5>;

    /**
        \brief reduction of every basis slot to the five gap objects.

        ∫ d/dx [x^k √|P(x)| e^{ωx}] dx and ∫ d/dx [√|P(x)| e^{ωx}/(f−x)] dx
        vanish over a gap between consecutive roots of the monic cubic P, which
        expresses the moments M₃..M₅ and the double-pole integrals through
        M₀..M₂ and the simple-pole integrals.
    */
    struct reducer_t
    {
        double c2, c1, c0; // P(x) = x³ + c2 x² + c1 x + c0
        double om;
        std::array<red5_t, rat_n> table{};

        reducer_t(std::vector<double> const& b, njet_t const& f0, njet_t const& f1,
                  double om_)
            : om{om_}
        {
            c2 = -(b[0] + b[1] + b[2]);
            c1 = b[0] * b[1] + b[0] * b[2] + b[1] * b[2];
            c0 = -b[0] * b[1] * b[2];
            auto mono = std::array<red5_t, 6>{};
            for (int k = 0; k < 3; ++k) mono[k][k] = njet_t{cplx{1.0}};
            for (int k = 0; k <= 2; ++k) {
                auto acc = red5_t{};
                for (int a = 0; a < 5; ++a) {
                    acc[a] = (1.5 + om * c2 + k) * mono[k + 2][a]
                             + (c2 + om * c1 + k * c2) * mono[k + 1][a]
                             + (0.5 * c1 + om * c0 + k * c1) * mono[k][a];
                    if (k >= 1) acc[a] += (k * c0) * mono[k - 1][a];
                    mono[k + 3][a] = -acc[a] / om;
                }
            }
            for (int k = 0; k < 6; ++k) table[k] = mono[k];
            table[pole_slot(0, 1)][3] = njet_t{cplx{1.0}};
            table[pole_slot(1, 1)][4] = njet_t{cplx{1.0}};
            table[pole_slot(0, 2)] = double_pole(f0, table[pole_slot(0, 1)]);
            table[pole_slot(1, 2)] = double_pole(f1, table[pole_slot(1, 1)]);
        }

        auto peval(njet_t const& x) const -> njet_t { return ((x + c2) * x + c1) * x + c0; }
        auto pdeval(njet_t const& x) const -> njet_t { return (3.0 * x + 2.0 * c2) * x + c1; }

        /// (f−x)^{−2} integral through the simple-pole one and low moments
        auto double_pole(njet_t const& f, red5_t const& simple) const -> red5_t
        {
            auto const pf = peval(f);
            auto const ipf = inverse(pf);
            auto const n1c = om * pf - 0.5 * pdeval(f);
            auto const bq = 0.5 + om * (3.0 * f + c2);
            auto const poly0 = -om * pdeval(f) + bq * f - om * f * f;
            auto const poly1 = -bq + (2.0 * om) * f;
            auto out = red5_t{};
            for (int a = 0; a < 5; ++a) out[a] = n1c * simple[a];
            out[0] += poly0;
            out[1] += poly1;
            out[2] += njet_t{cplx{-om}};
            for (int a = 0; a < 5; ++a) out[a] = -(out[a] * ipf);
            return out;
        }
    };

    /// integral objects of one gap: moments M₀..M₂ and the fermionic-pole integrals
    struct gap_objects_t
    {
        std::array<double, 3> m{};
        std::array<njet_t, 2> n{};
    };

    auto gap_objects(std::vector<double> const& b, int gap, double om, njet_t const& f0,
                     njet_t const& f1, quadrature_config_t const& cfg) -> gap_objects_t
    {
        auto const lo = b[gap];
        auto const hi = b[gap + 1];
        auto const weight = [&](double x) {
            return std::exp(om * x)
                   / std::sqrt(std::abs((x - b[0]) * (x - b[1]) * (x - b[2])));
        };
        auto out = gap_objects_t{};
        for (int k = 0; k < 3; ++k) {
            auto const r = integrate_endpoint_singular<double>(
                [&](double x) { return std::pow(x, double(k)) * weight(x); }, lo, hi, cfg);
            if (!r.converged)
                throw accuracy_error{"phi_34: gap moment integral diverged", r.est_error};
            out.m[k] = r.value;
        }
        auto const fs = std::array{f0, f1};
        for (int l = 0; l < 2; ++l) {
            auto const r = integrate_endpoint_singular<njet_t>(
                [&](double x) { return inverse(fs[l] - x) * weight(x); }, lo, hi, cfg);
            if (!r.converged)
                throw accuracy_error{"phi_34: gap pole integral diverged", r.est_error};
            out.n[l] = r.value;
        }
        return out;
    }

} // namespace

auto g_norm(int k1, int k2) -> double
{
    if (k1 < 1 || k2 < 1) throw std::invalid_argument{"g_norm: k1, k2 must be >= 1"};
    auto const two_exp =
        3.0 * k2 * (k2 - k1) + k1 * k1 / 4.0 - 2.5 * k2 - 0.5 * k1;
    auto const d = double(k1 - 2 * k2);
    auto const pi_exp = (d * d + 2.0 * k1 * k1 - 2.0 * k2) / 4.0;
    return std::pow(2.0, two_exp)
           / (std::pow(pi, pi_exp) * factorial(k2) * std::tgamma(k1 / 2.0));
}

auto c_muirhead(int k1) -> double
{
    if (k1 < 1) throw std::invalid_argument{"c_muirhead: k1 must be >= 1"};
    return std::tgamma(k1 / 2.0) * std::pow(pi, k1 * k1 / 2.0 - k1 / 4.0)
           / factorial(k1);
}

auto phi_12(nilpotent_spectrum_t const& s, super_spectrum_t const& r) -> njet_t
{
    require_shape(s, r, 1, 1, "phi_12");
    auto const core =
        1.0 - (2.0 * (r.bosonic[0] - r.f(0))) * (s.bosonic[0] - s.f(0));
    return g_norm(1, 1) * exp(trg_prod(s, r)) * core;
}

auto phi_12(super_spectrum_t const& s, super_spectrum_t const& r) -> bessel_value_t
{
    auto const value = phi_12(lift_spectrum(s), r).body();
    return {value, 1e-14 * std::abs(value)};
}

auto phi_22(nilpotent_spectrum_t const& s, super_spectrum_t const& r) -> njet_t
{
    require_shape(s, r, 2, 1, "phi_22");
    auto const f = s.f(0);
    auto const rho = r.f(0);
    auto const z = (s.bosonic[0] - s.bosonic[1]) * (r.bosonic[0] - r.bosonic[1]);
    auto prod = njet_t{cplx{4.0}};
    auto sum_s = njet_t{};
    auto sum_r = cplx{};
    for (int j = 0; j < 2; ++j) {
        prod *= (rho - r.bosonic[j]) * (f - s.bosonic[j]);
        sum_s += f - s.bosonic[j];
        sum_r += rho - r.bosonic[j];
    }
    auto const i0 = cyl_bessel_i(0, z / 2);
    auto const zi1 = z * cyl_bessel_i(1, z / 2); // z I₀'(z/2), argument derivative
    return (g_norm(2, 1) * 2.0 * pi) * exp(trg_prod(s, r) - z / 2)
           * ((prod - sum_s * sum_r) * i0 - zi1);
}

auto phi_22(super_spectrum_t const& s, super_spectrum_t const& r) -> bessel_value_t
{
    auto const value = phi_22(lift_spectrum(s), r).body();
    return {value, 1e-13 * std::abs(value)};
}

auto phi_14(nilpotent_spectrum_t const& s, super_spectrum_t const& r) -> njet_t
{
    require_shape(s, r, 1, 2, "phi_14");
    require_distinct_fermions(s, "phi_14");
    require_distinct_fermions(r, "phi_14");
    auto const b = s.bosonic[0];
    auto const rb = r.bosonic[0];
    auto const df = s.f(1) - s.f(0);
    auto value = njet_t{};
    for (auto const& sig : pairings) {
        auto const rho0 = r.f(sig[0]);
        auto const rho1 = r.f(sig[1]);
        auto const drho = rho1 - rho0;
        auto const inv2 = inverse(df * df * (drho * drho));
        auto const inv3 = inv2 * inverse(df * drho);
        auto const b0 = (2.0 * (rho0 - rb)) * (s.f(0) - b) - 1.0;
        auto const b1 = (2.0 * (rho1 - rb)) * (s.f(1) - b) - 1.0;
        auto const e = exp(b * rb + paired_fermions(s, r, sig));
        value += e * ((inv2 + inv3) * b0 * b1 - inv3);
    }
    return g_norm(1, 2) * value;
}

auto phi_14(super_spectrum_t const& s, super_spectrum_t const& r) -> bessel_value_t
{
    auto const value = phi_14(lift_spectrum(s), r).body();
    return {value, 1e-13 * std::abs(value)};
}

auto phi_24(nilpotent_spectrum_t const& s, super_spectrum_t const& r) -> njet_t
{
    require_shape(s, r, 2, 2, "phi_24");
    require_distinct_fermions(s, "phi_24");
    require_distinct_fermions(r, "phi_24");
    auto const b0 = s.bosonic[0];
    auto const b1 = s.bosonic[1];
    auto const y0 = r.bosonic[0];
    auto const y1 = r.bosonic[1];
    auto const om = y1 - y0;
    auto const mid = 0.5 * (b0 + b1);
    auto const z = (b0 - b1) * (y0 - y1);
    auto const i0 = cyl_bessel_i(0, z / 2);
    auto const i1 = cyl_bessel_i(1, z / 2);
    auto const f = std::array{s.f(0), s.f(1)};
    auto const dl = f[1] - f[0];
    auto const dinv = inverse(dl);
    // per-fermion bosonic-gap products and sums of s
    auto const q = std::array{(f[0] - b0) * (f[0] - b1), (f[1] - b0) * (f[1] - b1)};
    auto const qinv = std::array{inverse(q[0]), inverse(q[1])};
    auto const sg = std::array{2.0 * f[0] - (b0 + b1), 2.0 * f[1] - (b0 + b1)};
    auto value = njet_t{};
    for (auto const& sig : pairings) {
        auto const rho = std::array{r.f(sig[0]), r.f(sig[1])};
        auto const a0 = rho[0] - y1;
        auto const a1 = rho[1] - y1;
        auto const dr = rho[1] - rho[0];
        auto const j2 = inverse(dl * dl * (dr * dr));
        auto const j3 = j2 * dinv * inverse(dr);
        auto const j = j2 + j3;
        auto const jb = 2.0 * j2 + 3.0 * j3;
        auto const t0 = sg[0] + (2.0 * (y0 - rho[0])) * q[0];
        auto const t1 = sg[1] + (2.0 * (y0 - rho[1])) * q[1];
        auto const beta0 = (-2.0 * a0) * dl - 1.0;
        auto const beta1 = (2.0 * a1) * dl - 1.0;
        // constant part of the reduced pair bracket
        auto const c0 = (4.0 * a0 * a1)
                        * (j * t0 * t1 - j3 * dinv * (q[1] * t0 - q[0] * t1)
                           + (2.0 * j2) * dinv * dinv * q[0] * q[1]);
        // double-pole weights at the fermionic eigenvalues
        auto const d02 = (-2.0 * dinv) * q[0]
                         * (q[1] * (jb * dinv * beta1 - (2.0 * a1) * j + (3.0 * j3) * dinv)
                            - t1 * (j * beta1 + j3));
        auto const d12 = (-2.0 * dinv) * q[1]
                         * (q[0] * (jb * dinv * beta0 + (2.0 * a0) * j + (3.0 * j3) * dinv)
                            + t0 * (j * beta0 + j3));
        auto const pole_m = d02 * qinv[0] + d12 * qinv[1];
        auto const pole_f = d02 * (f[0] - mid) * qinv[0] + d12 * (f[1] - mid) * qinv[1];
        auto const bra_i0 = c0 + om * pole_f;
        auto const bra_i1 = (z / 2) * pole_m;
        value += exp(paired_fermions(s, r, sig)) * (bra_i0 * i0 + bra_i1 * i1);
    }
    auto const skel = pi * std::exp(b0 * y0 + b1 * y1 - z / 2);
    auto const cst = g_norm(2, 2) * (std::pow(2.0, 4.5) / (3.0 * std::sqrt(pi)));
    return (cst * skel) * value;
}

auto phi_24(super_spectrum_t const& s, super_spectrum_t const& r) -> bessel_value_t
{
    auto const value = phi_24(lift_spectrum(s), r).body();
    return {value, 1e-12 * std::abs(value)};
}

auto phi_34(nilpotent_spectrum_t const& s, super_spectrum_t const& r,
            quadrature_config_t const& cfg) -> njet_t
{
    require_shape(s, r, 3, 2, "phi_34");
    require_distinct_fermions(s, "phi_34");
    require_distinct_fermions(r, "phi_34");
    auto const [r11, r21] = split_degenerate_bosons(r, "phi_34");
    auto const& b = s.bosonic;
    if (!(b[0] < b[1] && b[1] < b[2]))
        throw std::domain_error{"phi_34: bosonic eigenvalues must be strictly increasing"};
    auto const om = r21 - r11; // offset of the doubled from the simple r-entry
    auto const one = njet_t{cplx{1.0}};
    auto const fs = std::array{s.f(0), s.f(1)};
    auto const dinv = inverse(fs[1] - fs[0]);

    auto const rc = rat_calculus_t{fs[0], fs[1]};
    auto const red = reducer_t{b, fs[0], fs[1], om};
    auto const gaps = std::array{gap_objects(b, 0, om, fs[0], fs[1], cfg),
                                 gap_objects(b, 1, om, fs[0], fs[1], cfg)};
    auto const object = [&](int gap, int a) {
        return a < 3 ? njet_t{cplx{gaps[gap].m[a]}} : gaps[gap].n[a - 3];
    };

    // characteristic polynomial data at the fermionic eigenvalues
    auto qh = std::array<njet_t, 2>{};
    auto sh = std::array<njet_t, 2>{};
    for (int l = 0; l < 2; ++l) {
        qh[l] = (fs[l] - b[0]) * (fs[l] - b[1]) * (fs[l] - b[2]);
        sh[l] = (fs[l] - b[0]) * (fs[l] - b[1]) + (fs[l] - b[0]) * (fs[l] - b[2])
                + (fs[l] - b[1]) * (fs[l] - b[2]);
    }

    // pairing-independent polynomial blocks: products over both variables of
    // the simple fermion-minus-variable factors and their sums
    auto gg = std::array<biv_t, 2>{};
    auto pp = std::array<biv_t, 2>{};
    auto qt = std::array<biv_t, 2>{};
    for (int l = 0; l < 2; ++l) {
        gg[l].add(0, 0, fs[l] * fs[l]);
        gg[l].add(1, 0, -fs[l]);
        gg[l].add(0, 1, -fs[l]);
        gg[l].add(1, 1, one);
        pp[l].add(0, 0, 2.0 * fs[l]);
        pp[l].add(1, 0, -one);
        pp[l].add(0, 1, -one);
        qt[l].add(pole_slot(l, 1), pole_slot(l, 1), qh[l]);
    }
    auto const gg01 = biv_mul(rc, gg[0], gg[1]);
    auto const p0gg1 = biv_mul(rc, pp[0], gg[1]);
    auto const p1gg0 = biv_mul(rc, pp[1], gg[0]);
    auto const p0p1 = biv_mul(rc, pp[0], pp[1]);
    auto const p_qq = biv_mul(rc, qt[0], qt[1]);

    auto value = njet_t{};
    for (auto const& sig : pairings) {
        auto const rho = std::array{r.f(sig[0]), r.f(sig[1])};
        auto const a0 = rho[0] - r21;
        auto const a1 = rho[1] - r21;
        auto const dr = rho[1] - rho[0];
        auto const j2 = dinv * dinv * inverse(dr * dr);
        auto const j3 = j2 * dinv * inverse(dr);
        auto const j = j2 + j3;
        auto const jbd = (2.0 * j2 + 3.0 * j3) * dinv;
        auto const jcd2 = (6.0 * j2 + 12.0 * j3) * dinv * dinv;
        auto const j3d = j3 * dinv;
        auto const j2d2 = j2 * dinv * dinv;

        // linear fermionic units t, τ and their pair products
        auto t_ten = std::array<biv_t, 2>{pp[0], pp[1]};
        biv_axpy(t_ten[0], -2.0 * a0, gg[0]);
        biv_axpy(t_ten[1], -2.0 * a1, gg[1]);
        auto tau = std::array<biv_t, 2>{};
        tau[0].add(0, 0, njet_t{cplx{2.0}});
        tau[1].add(0, 0, njet_t{cplx{2.0}});
        biv_axpy(tau[0], -2.0 * a0, pp[0]);
        biv_axpy(tau[1], -2.0 * a1, pp[1]);

        auto const t0t1 = biv_mul(rc, t_ten[0], t_ten[1]);
        auto const tau0t1 = biv_mul(rc, tau[0], t_ten[1]);
        auto const tau1t0 = biv_mul(rc, tau[1], t_ten[0]);
        auto const tau0tau1 = biv_mul(rc, tau[0], tau[1]);
        auto const gg1tau0 = biv_mul(rc, gg[1], tau[0]);
        auto const gg0tau1 = biv_mul(rc, gg[0], tau[1]);
        auto const p0t1 = biv_mul(rc, pp[0], t_ten[1]);
        auto const p1t0 = biv_mul(rc, pp[1], t_ten[0]);
        auto x00 = biv_mul(rc, gg[1], t_ten[0]);
        biv_axpy(x00, -1.0, biv_mul(rc, gg[0], t_ten[1]));

        auto const pref = 4.0 * a0 * a1;
        auto k0 = biv_t{};
        biv_axpy(k0, pref * j, t0t1);
        biv_axpy(k0, -pref * j3d, x00);
        biv_axpy(k0, (2.0 * pref) * j2d2, gg01);
        auto ka = biv_t{};
        biv_axpy(ka, pref * j, tau0t1);
        biv_axpy(ka, pref * jbd, t0t1);
        biv_axpy(ka, -pref * j3d, gg1tau0);
        biv_axpy(ka, pref * j3d, p0t1);
        biv_axpy(ka, (-4.0 * pref) * (j3d * dinv), x00);
        biv_axpy(ka, (2.0 * pref) * j2d2, p0gg1);
        biv_axpy(ka, (8.0 * pref) * (j2d2 * dinv), gg01);
        auto kb = biv_t{};
        biv_axpy(kb, pref * j, tau1t0);
        biv_axpy(kb, -pref * jbd, t0t1);
        biv_axpy(kb, -pref * j3d, p1t0);
        biv_axpy(kb, pref * j3d, gg0tau1);
        biv_axpy(kb, (4.0 * pref) * (j3d * dinv), x00);
        biv_axpy(kb, (2.0 * pref) * j2d2, p1gg0);
        biv_axpy(kb, (-8.0 * pref) * (j2d2 * dinv), gg01);
        auto kc = biv_t{};
        biv_axpy(kc, pref * j, tau0tau1);
        biv_axpy(kc, -pref * jbd, tau0t1);
        biv_axpy(kc, pref * jbd, tau1t0);
        biv_axpy(kc, -pref * jcd2, t0t1);
        biv_axpy(kc, -pref * j3d, biv_mul(rc, pp[1], tau[0]));
        biv_axpy(kc, pref * j3d, biv_mul(rc, pp[0], tau[1]));
        biv_axpy(kc, (4.0 * pref) * (j3d * dinv), gg1tau0);
        biv_axpy(kc, (-4.0 * pref) * (j3d * dinv), p0t1);
        biv_axpy(kc, (-4.0 * pref) * (j3d * dinv), p1t0);
        biv_axpy(kc, (4.0 * pref) * (j3d * dinv), gg0tau1);
        biv_axpy(kc, (20.0 * pref) * (j3d * dinv * dinv), x00);
        biv_axpy(kc, (2.0 * pref) * j2d2, p0p1);
        biv_axpy(kc, (-8.0 * pref) * (j2d2 * dinv), p0gg1);
        biv_axpy(kc, (8.0 * pref) * (j2d2 * dinv), p1gg0);
        biv_axpy(kc, (-40.0 * pref) * (j2d2 * dinv * dinv), gg01);

        // quadratic fermionic units u, pure pole tensors
        auto ut = std::array<biv_t, 2>{};
        for (int l = 0; l < 2; ++l) {
            ut[l].add(pole_slot(l, 1), pole_slot(l, 1),
                      sh[l] + (2.0 * (r11 - rho[l])) * qh[l]);
            ut[l].add(pole_slot(l, 2), pole_slot(l, 1), -2.0 * qh[l]);
            ut[l].add(pole_slot(l, 1), pole_slot(l, 2), -2.0 * qh[l]);
        }
        auto const p_uq = biv_mul(rc, ut[0], qt[1]);
        auto const p_qu = biv_mul(rc, qt[0], ut[1]);
        auto const p_uu = biv_mul(rc, ut[0], ut[1]);

        auto const dinv2 = 2.0 * dinv;
        auto c_qq = kc;
        biv_axpy(c_qq, dinv2, ka);
        biv_axpy(c_qq, -dinv2, kb);
        auto c_uq = kb;
        biv_axpy(c_uq, dinv2, k0);
        auto c_qu = ka;
        biv_axpy(c_qu, -dinv2, k0);
        auto v = biv_mul(rc, p_qq, c_qq);
        biv_axpy(v, 1.0, biv_mul(rc, p_uq, c_uq));
        biv_axpy(v, 1.0, biv_mul(rc, p_qu, c_qu));
        biv_axpy(v, 1.0, biv_mul(rc, p_uu, k0));

        // multiply by (x₂ − x₁), the fresh factor of the interlacing measure
        auto fold = biv_t{};
        for (int i = 0; i < rat_n; ++i)
            for (int jj = 0; jj < rat_n; ++jj) {
                if (!(v.used[i] >> jj & 1u)) continue;
                auto const& vij = v.t[i][jj];
                for (auto const& [slot, w] : shift_terms(jj, fs)) fold.add(i, slot, vij * w);
                for (auto const& [slot, w] : shift_terms(i, fs))
                    fold.add(slot, jj, -(vij * w));
            }

        // contract both variables down to the five gap objects
        auto theta = std::array<std::array<njet_t, 5>, 5>{};
        for (int i = 0; i < rat_n; ++i)
            for (int jj = 0; jj < rat_n; ++jj) {
                if (!(fold.used[i] >> jj & 1u)) continue;
                auto const& ri = red.table[i];
                auto const& rj = red.table[jj];
                for (int a = 0; a < 5; ++a) {
                    auto const tmp = fold.t[i][jj] * ri[a];
                    if (tmp == njet_t{}) continue;
                    for (int bb = 0; bb < 5; ++bb) theta[a][bb] += tmp * rj[bb];
                }
            }
        auto val = njet_t{};
        for (int a = 0; a < 5; ++a) {
            auto inner = njet_t{};
            for (int bb = 0; bb < 5; ++bb) inner += theta[a][bb] * object(1, bb);
            val += inner * object(0, a);
        }
        value += exp(paired_fermions(s, r, sig)) * val;
    }
    auto const vol = 8.0 * std::pow(2.0 * pi, 0.75);
    auto const cst = g_norm(3, 2) * (2.0 / 3.0) * vol * vol
                     * (g_norm(2, 2) * (std::pow(2.0, 4.5) / (3.0 * std::sqrt(pi))) * pi);
    return (cst * std::exp((b[0] + b[1] + b[2]) * r11)) * value;
}

auto phi_34(super_spectrum_t const& s, super_spectrum_t const& r,
            quadrature_config_t const& cfg) -> bessel_value_t
{
    auto const value = phi_34(lift_spectrum(s), r, cfg).body();
    auto const est = (std::abs(value) * cfg.rel_tol + cfg.abs_tol) * 50.0;
    return {value, est};
}

auto phi_44(nilpotent_spectrum_t const& s, super_spectrum_t const& r,
            quadrature_config_t const& cfg) -> njet_t
{
    require_shape(s, r, 4, 2, "phi_44");
    require_distinct_fermions(s, "phi_44");
    require_distinct_fermions(r, "phi_44");
    auto const [r11, r21] = split_degenerate_bosons(r, "phi_44");
    auto const table = make_jet_table(s.bosonic, [&](std::vector<njet_t> const& a) {
        return phi4_o4_deg(a, njet_t{cplx{r11}}, njet_t{cplx{r21}}, cfg);
    });
    auto const f0 = s.f(0);
    auto const f1 = s.f(1);
    auto const df = f1 - f0;
    auto const q_const = r11 * r11 + r21 * r21 + r11 * r21
                         - (r11 + r21) * (r.f(0) + r.f(1)) + r.f(0) * r.f(1);
    auto const r_const = r11 + r21 - r.f(0) - r.f(1); // = ½ trg r for this pattern
    auto const miss0 = missing_products(s.bosonic, f0);
    auto const miss1 = missing_products(s.bosonic, f1);
    auto const rb_prod = (r11 - r.f(0)) * (r11 - r.f(1)) * (r21 - r.f(0))
                         * (r21 - r.f(1));
    auto value = njet_t{};
    for (auto const& sig : pairings) {
        auto const rho0 = r.f(sig[0]);
        auto const rho1 = r.f(sig[1]);
        auto const drho = rho1 - rho0;
        auto const inv2 = inverse(df * df * (drho * drho));
        auto const inv3 = inv2 * inverse(df * drho);
        auto const inv34 = inv3 * inverse(df);
        auto const p1 = pair_operator(s.bosonic, r11, r21, f0, rho0, 8.0);
        auto const p2 = pair_operator(s.bosonic, r11, r21, f1, rho1, 8.0);
        auto const main = (inv2 + inv3) * apply_pair_product(p1, p2, table);
        auto corr1 = njet_t{};
        for (std::size_t i = 0; i < 4; ++i)
            corr1 += miss0[i] * miss1[i] * (q_const * table.val + r_const * table.d1[i]);
        corr1 = corr1 * (-16.0) * inv3;
        auto corr2 = njet_t{};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t k = 0; k < 4; ++k)
                corr2 += miss0[i] * miss1[k] * (table.d1[i] - table.d1[k]);
        corr2 = corr2 * (-8.0) * inv34;
        auto const pre = exp(paired_fermions(s, r, sig)) * rb_prod;
        value += pre * (main + corr1 + corr2);
    }
    return (4.0 * g_norm(4, 2)) * value;
}

auto phi_44(super_spectrum_t const& s, super_spectrum_t const& r,
            quadrature_config_t const& cfg) -> bessel_value_t
{
    auto const value = phi_44(lift_spectrum(s), r, cfg).body();
    auto const est = (std::abs(value) * cfg.rel_tol + cfg.abs_tol) * 50.0;
    return {value, est};
}

auto asym_limit(super_spectrum_t const& s, super_spectrum_t const& r, double t)
    -> bessel_value_t
{
    if (s.k1() != r.k1() || s.k2() != r.k2())
        throw std::invalid_argument{"asym_limit: dimension mismatch"};
    if (!(t > 0.0)) throw std::domain_error{"asym_limit: t must be positive"};
    for (auto const* sp : {&s, &r}) {
        for (std::size_t p = 1; p < sp->k1(); ++p)
            if (sp->bosonic[p] == sp->bosonic[p - 1])
                throw std::domain_error{"asym_limit: degenerate bosonic eigenvalues"};
        for (std::size_t p = 0; p < sp->k2(); ++p)
            for (std::size_t q = p + 1; q < sp->k2(); ++q)
                if (sp->fermionic[p] == sp->fermionic[q])
                    throw std::domain_error{"asym_limit: degenerate fermionic eigenvalues"};
    }
    auto const k1 = int(s.k1());
    auto const k2 = int(s.k2());
    // det[exp(scale·x_n y_m / t)] with centered exponents to avoid overflow
    auto const det_exp = [t](std::vector<double> const& x, std::vector<double> const& y,
                             double scale) -> double {
        auto const n = long(x.size());
        auto xm = 0.0, ym = 0.0;
        for (auto const v : x) xm += v / double(n);
        for (auto const v : y) ym += v / double(n);
        auto m = Eigen::MatrixXd(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                m(i, j) = std::exp(scale * (x[std::size_t(i)] - xm)
                                   * (y[std::size_t(j)] - ym) / t);
        auto shift = -double(n) * xm * ym;
        for (auto const v : x) shift += v * ym;
        for (auto const v : y) shift += v * xm;
        return std::exp(scale * shift / t) * m.determinant();
    };
    auto const d = double(k1 - 2 * k2);
    auto const gamma = (d * d + d) / 4.0;
    auto const value = std::pow(2.0, double(k1 * k2)) * std::pow(t, gamma)
                       * c_muirhead(k1) * g_norm(k1, k2)
                       * det_exp(s.bosonic, r.bosonic, 1.0)
                       * det_exp(s.fermionic, r.fermionic, 2.0)
                       / std::sqrt(berezinian(s) * berezinian(r));
    return {value, 1e-12 * std::abs(value)};
}

} // namespace sbf
