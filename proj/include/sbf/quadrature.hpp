// SPDX-License-Identifier: MIT
/**
    \file
    \brief quadrature primitives: nested interlaced integrals, real-line integrals
           with algebraic tails, and deterministic Monte-Carlo means

    Three integral classes appear in the radial recursion and its verification:
      1. nested integrals over interlacing eigenvalue boxes whose weight diverges
         like an inverse square root at every box face — handled exactly by the
         substitution x = a + (b−a)sin²θ, whose Jacobian cancels the divergence;
      2. real-line integrals of analytic integrands with O(|t|^{−k}) tails —
         handled by octave-doubling panels plus an analytic tail bound;
      3. averages over compact groups — plain Monte Carlo with split substreams,
         bit-for-bit reproducible for a fixed seed and independent of threading.

    All rules are generic over the value type, so integrands may return complex
    numbers or nilpotent jets (integrated coefficient-wise by linearity).
*/
#ifndef SBF_QUADRATURE_HPP
#define SBF_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <sbf/nilpotent.hpp>

namespace sbf {

struct quadrature_config_t
{
    double rel_tol{1e-10};
    double abs_tol{1e-12};
    int max_subdivisions{2000};
    double tail_cutoff{1e7}; ///< largest |t| a real-line integral will ever evaluate
    std::uint64_t seed{0};
};

/// quadrature failed to meet the requested tolerance; carries the best bound reached
struct accuracy_error : std::runtime_error
{
    double best_error;
    explicit accuracy_error(std::string const& what, double err)
        : std::runtime_error{what + " (error bound " + std::to_string(err) + ")"},
          best_error{err}
    {
    }
};

template <typename value_t>
struct quad_result_t
{
    value_t value{};
    double est_error{0.0};
    bool converged{true};
};

namespace detail {

    // Gauss–Kronrod 7–15 pair on [−1, 1]
    inline constexpr double gk_x[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0};
    inline constexpr double gk_wk[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    inline constexpr double gk_wg[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

    template <typename f_t, typename value_t>
    auto gk15_panel(f_t& f, double a, double b, value_t& kronrod) -> double
    {
        auto const c = 0.5 * (a + b);
        auto const h = 0.5 * (b - a);
        auto gauss = value_t{};
        kronrod = value_t{};
        for (int i = 0; i < 8; ++i) {
            auto const lo = f(c - h * gk_x[i]);
            auto sum = lo;
            if (i < 7) sum += f(c + h * gk_x[i]);
            kronrod += sum * gk_wk[i];
            if (i % 2 == 1) gauss += sum * gk_wg[i / 2];
        }
        kronrod = kronrod * h;
        gauss = gauss * h;
        return value_norm(kronrod - gauss);
    }

} // namespace detail

/**
    \brief adaptive Gauss–Kronrod integration of f over [a, b].

    Bisects the segment with the largest embedded-rule error until the summed
    error bound meets max(abs_tol, rel_tol·‖I‖) or max_subdivisions is spent.
    Never evaluates f at a or b (all nodes are interior), so integrands may be
    singular at the endpoints as long as they are integrable.
*/
template <typename value_t, typename f_t>
auto integrate_adaptive(f_t&& f, double a, double b, quadrature_config_t const& cfg)
    -> quad_result_t<value_t>
{
    struct seg_t
    {
        double a, b, err;
        value_t val;
    };
    // max-heap on the segment error so the worst panel pops in O(log n);
    // running sums steer convergence and are re-accumulated exactly on return.
    auto heap_less = [](seg_t const& x, seg_t const& y) { return x.err < y.err; };
    auto segs = std::vector<seg_t>{};
    auto run_val = value_t{};
    auto run_err = 0.0;
    auto push = [&](double lo, double hi) {
        auto v = value_t{};
        auto const e = detail::gk15_panel(f, lo, hi, v);
        run_val += v;
        run_err += e;
        segs.push_back({lo, hi, e, v});
        std::push_heap(segs.begin(), segs.end(), heap_less);
    };
    auto refresh = [&] {
        run_val = value_t{};
        run_err = 0.0;
        for (auto const& s : segs) {
            run_val += s.val;
            run_err += s.err;
        }
    };
    auto finish = [&](bool converged) -> quad_result_t<value_t> {
        refresh();
        return {run_val, run_err, converged};
    };
    push(a, b);
    for (int n = 1; n < cfg.max_subdivisions; ++n) {
        if (run_err <= std::max(cfg.abs_tol, cfg.rel_tol * value_norm(run_val)))
            return finish(true);
        std::pop_heap(segs.begin(), segs.end(), heap_less);
        auto const worst = segs.back();
        segs.pop_back();
        run_val -= worst.val;
        run_err -= worst.err;
        push(worst.a, 0.5 * (worst.a + worst.b));
        push(0.5 * (worst.a + worst.b), worst.b);
        if (n % 4096 == 0) refresh(); // curb drift in the incremental sums
    }
    return finish(run_err <= std::max(cfg.abs_tol, cfg.rel_tol * value_norm(run_val)));
}

/**
    \brief ∫_a^b f(x) dx after the substitution x = a + (b−a) sin²θ.

    dx = (b−a) sin(2θ) dθ vanishes linearly at both faces, which cancels
    (x−a)^{−1/2} and (b−x)^{−1/2} divergences of f exactly; the substituted
    integrand is bounded whenever f is integrable with at worst inverse-square-root
    endpoint behavior.
*/
template <typename value_t, typename f_t>
auto integrate_endpoint_singular(f_t&& f, double a, double b, quadrature_config_t const& cfg)
    -> quad_result_t<value_t>
{
    auto const len = b - a;
    auto g = [&](double theta) {
        auto const s = std::sin(theta);
        auto const x = a + len * s * s;
        return f(x) * (len * std::sin(2.0 * theta));
    };
    constexpr auto half_pi = 1.5707963267948966;
    return integrate_adaptive<value_t>(g, 0.0, half_pi, cfg);
}

/**
    \brief nested integral over the interlacing box s_p ≤ x_p ≤ s_{p+1}.

    outer holds the k₁ sorted outer eigenvalues; f receives the k₁−1 inner
    coordinates.  Each level uses the sin² substitution, so measure factors with
    inverse-square-root divergence at the box faces are integrated exactly.
    For k₁ = 1 the box is empty and f({}) is returned.
*/
template <typename value_t, typename f_t>
auto integrate_interlaced(f_t&& f, std::vector<double> const& outer,
                          quadrature_config_t const& cfg) -> quad_result_t<value_t>
{
    auto const k1 = outer.size();
    if (k1 == 0) throw std::invalid_argument{"integrate_interlaced: empty outer spectrum"};
    for (std::size_t p = 1; p < k1; ++p)
        if (!(outer[p - 1] < outer[p]))
            throw std::invalid_argument{"integrate_interlaced: outer not strictly increasing"};
    auto x = std::vector<double>(k1 >= 1 ? k1 - 1 : 0);
    auto err_inner = 0.0; // worst inner-level bound; inner errors propagate linearly
    std::function<quad_result_t<value_t>(std::size_t)> level =
        [&](std::size_t q) -> quad_result_t<value_t> {
        if (q == k1 - 1) return {f(static_cast<std::vector<double> const&>(x)), 0.0, true};
        auto g = [&](double xq) {
            x[q] = xq;
            auto const inner = level(q + 1);
            err_inner = std::max(err_inner, inner.est_error * (outer[q + 1] - outer[q]));
            if (!inner.converged)
                throw accuracy_error{"integrate_interlaced: inner level diverged",
                                     inner.est_error};
            return inner.value;
        };
        return integrate_endpoint_singular<value_t>(g, outer[q], outer[q + 1], cfg);
    };
    auto result = level(0);
    result.est_error += err_inner;
    if (!result.converged)
        throw accuracy_error{"integrate_interlaced: tolerance not met", result.est_error};
    return result;
}

/**
    \brief ∫_0^∞ f(t) dt for analytic f with |f(t)| = O(t^{−decay_order}).

    A core segment is integrated adaptively, then octave segments [T, 2T] are
    added until the analytic remainder bound |f(T)|·T/(k−1) falls below abs_tol
    or T reaches tail_cutoff.  The remainder bound is added to est_error, so a
    capped tail is reported honestly (for oscillatory integrands the true error
    is typically far smaller than this monotone bound).
*/
template <typename value_t, typename f_t>
auto integrate_half_line(f_t&& f, double decay_order, quadrature_config_t const& cfg)
    -> quad_result_t<value_t>
{
    if (decay_order < 1.5)
        throw std::domain_error{"integrate_half_line: decay_order below 3/2 cannot converge"};
    auto total = quad_result_t<value_t>{};
    auto T = 8.0;
    auto core = integrate_adaptive<value_t>(f, 0.0, T, cfg);
    total.value += core.value;
    total.est_error += core.est_error;
    total.converged = core.converged;
    auto tail_bound = [&](double t) {
        return value_norm(f(t)) * t / (decay_order - 1.0);
    };
    // Octave doubling stops on either the pointwise decay bound or — for
    // oscillatory integrands whose octave sums cancel far below that bound —
    // on two consecutive octave contributions under abs_tol.
    auto last = std::numeric_limits<double>::infinity();
    auto prev = last;
    while (tail_bound(T) > cfg.abs_tol
           && !(last < cfg.abs_tol && prev < cfg.abs_tol)
           && T < cfg.tail_cutoff) {
        auto const seg = integrate_adaptive<value_t>(f, T, 2.0 * T, cfg);
        total.value += seg.value;
        total.est_error += seg.est_error;
        total.converged = total.converged && seg.converged;
        prev = last;
        last = value_norm(seg.value);
        T *= 2.0;
    }
    total.est_error += (last < cfg.abs_tol && prev < cfg.abs_tol)
                           ? 2.0 * cfg.abs_tol
                           : tail_bound(T);
    return total;
}

/// ∫_{−∞}^{∞} f(t) dt under the same tail contract as integrate_half_line
template <typename value_t, typename f_t>
auto integrate_line(f_t&& f, double decay_order, quadrature_config_t const& cfg)
    -> quad_result_t<value_t>
{
    auto const pos = integrate_half_line<value_t>([&](double t) { return f(t); },
                                                  decay_order, cfg);
    auto const neg = integrate_half_line<value_t>([&](double t) { return f(-t); },
                                                  decay_order, cfg);
    return {pos.value + neg.value, pos.est_error + neg.est_error,
            pos.converged && neg.converged};
}

namespace detail {

    /// splitmix64 — stable 64-bit mix used to derive independent substreams
    inline auto mix64(std::uint64_t z) -> std::uint64_t
    {
        z += 0x9e3779b97f4a7c15ull;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

} // namespace detail

struct mc_result_t
{
    cplx mean{};
    double std_error{0.0};
};

/**
    \brief Monte-Carlo mean of f over elements drawn from sampler.

    Samples are generated in fixed-size chunks, each chunk from its own RNG seeded
    by mixing (seed, chunk index): the stream of samples — and hence the result —
    is bit-for-bit reproducible and independent of any parallel scheduling.
*/
template <typename sampler_t, typename f_t>
auto mc_mean(sampler_t&& sampler, f_t&& f, std::size_t n_samples, std::uint64_t seed)
    -> mc_result_t
{
    if (n_samples < 2) throw std::invalid_argument{"mc_mean: need at least 2 samples"};
    constexpr auto chunk = std::size_t{4096};
    auto sum = cplx{};
    auto sum_sq = 0.0;
    for (std::size_t start = 0; start < n_samples; start += chunk) {
        auto rng = std::mt19937_64{detail::mix64(seed ^ detail::mix64(start / chunk))};
        auto const stop = std::min(start + chunk, n_samples);
        for (std::size_t i = start; i < stop; ++i) {
            auto const v = f(sampler(rng));
            sum += v;
            sum_sq += std::norm(v);
        }
    }
    auto const n = double(n_samples);
    auto const mean = sum / n;
    auto const var = std::max(0.0, sum_sq / n - std::norm(mean));
    return {mean, std::sqrt(var / (n - 1.0))};
}

} // namespace sbf

#endif // SBF_QUADRATURE_HPP
