// SPDX-License-Identifier: MIT
/**
    \file ordinary.cpp
    \brief Ordinary-space matrix Bessel evaluators and Haar samplers.
*/
#include <sbf/ordinary.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sbf {

namespace {

    using std::numbers::pi;

    /// quaternion q = a + b·j stored as the complex pair (a, b)
    struct quat_t
    {
        cplx a{};
        cplx b{};
    };

    auto qmul(quat_t const& x, quat_t const& y) -> quat_t
    {
        return {x.a * y.a - x.b * std::conj(y.b), x.a * y.b + x.b * std::conj(y.a)};
    }

    auto qconj(quat_t const& x) -> quat_t { return {std::conj(x.a), -x.b}; }

    auto haar_orthogonal(int n, std::mt19937_64& rng) -> Eigen::MatrixXcd
    {
        auto normal = std::normal_distribution<double>{};
        auto m = Eigen::MatrixXd(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) m(i, j) = normal(rng);
        auto const qr = Eigen::HouseholderQR<Eigen::MatrixXd>{m};
        auto q = Eigen::MatrixXd{qr.householderQ()};
        auto const r = Eigen::MatrixXd{qr.matrixQR().triangularView<Eigen::Upper>()};
        for (int j = 0; j < n; ++j)
            if (r(j, j) < 0.0) q.col(j) *= -1.0;
        return q.cast<cplx>();
    }

    auto haar_symplectic(int n, std::mt19937_64& rng) -> Eigen::MatrixXcd
    {
        auto normal = std::normal_distribution<double>{};
        // columns of an n x n quaternionic Gaussian matrix
        auto cols = std::vector<std::vector<quat_t>>(std::size_t(n),
                                                     std::vector<quat_t>(std::size_t(n)));
        for (auto& col : cols)
            for (auto& q : col)
                q = {cplx{normal(rng), normal(rng)}, cplx{normal(rng), normal(rng)}};

        // Gram-Schmidt over the quaternions (right module), positive real norms
        for (std::size_t k = 0; k < cols.size(); ++k) {
            for (std::size_t i = 0; i < k; ++i) {
                auto h = quat_t{};
                for (std::size_t l = 0; l < cols[k].size(); ++l) {
                    auto const t = qmul(qconj(cols[i][l]), cols[k][l]);
                    h.a += t.a;
                    h.b += t.b;
                }
                for (std::size_t l = 0; l < cols[k].size(); ++l) {
                    auto const t = qmul(cols[i][l], h);
                    cols[k][l].a -= t.a;
                    cols[k][l].b -= t.b;
                }
            }
            auto norm_sq = 0.0;
            for (auto const& q : cols[k]) norm_sq += std::norm(q.a) + std::norm(q.b);
            auto const inv = 1.0 / std::sqrt(norm_sq);
            for (auto& q : cols[k]) {
                q.a *= inv;
                q.b *= inv;
            }
        }

        // interleaved complex embedding: block(I, K) = [[a, b], [-conj b, conj a]]
        auto u = Eigen::MatrixXcd(2 * n, 2 * n);
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i) {
                auto const& q = cols[std::size_t(k)][std::size_t(i)];
                u(2 * i, 2 * k) = q.a;
                u(2 * i, 2 * k + 1) = q.b;
                u(2 * i + 1, 2 * k) = -std::conj(q.b);
                u(2 * i + 1, 2 * k + 1) = std::conj(q.a);
            }
        return u;
    }

    /// sum of a span of jets
    auto sum(std::span<njet_t const> xs) -> njet_t
    {
        auto t = njet_t{};
        for (auto const& x : xs) t += x;
        return t;
    }

} // namespace

auto haar_sample(group_spec_t const& g, std::mt19937_64& rng) -> Eigen::MatrixXcd
{
    if (g.n < 1) throw std::invalid_argument{"haar_sample: group dimension must be >= 1"};
    return g.family == group_family_t::orthogonal ? haar_orthogonal(g.n, rng)
                                                  : haar_symplectic(g.n, rng);
}

auto vandermonde(std::span<njet_t const> vals, int power) -> njet_t
{
    auto prod = njet_t{cplx{1.0}};
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j) prod *= vals[j] - vals[i];
    if (power >= 0) {
        auto out = njet_t{cplx{1.0}};
        for (int k = 0; k < power; ++k) out *= prod;
        return out;
    }
    auto const inv = inverse(prod);
    auto out = njet_t{cplx{1.0}};
    for (int k = 0; k < -power; ++k) out *= inv;
    return out;
}

auto phi2_o2(std::span<njet_t const> s, std::span<njet_t const> r) -> njet_t
{
    if (s.size() != 2 || r.size() != 2)
        throw std::invalid_argument{"phi2_o2: expects two eigenvalues on each side"};
    auto const z = (s[0] - s[1]) * (r[0] - r[1]);
    return 2.0 * pi * exp(0.5 * (s[0] + s[1]) * (r[0] + r[1])) * cyl_bessel_i(0, 0.5 * z);
}

auto phi2_usp4(std::span<njet_t const> s2, std::span<njet_t const> r2) -> njet_t
{
    if (s2.size() != 2 || r2.size() != 2)
        throw std::invalid_argument{"phi2_usp4: expects two eigenvalues on each side"};
    auto const w = (s2[1] - s2[0]) * (r2[1] - r2[0]);
    auto const pre = exp((s2[0] + s2[1]) * (r2[0] + r2[1]));

    // h(w) = cosh(w)/w² − sinh(w)/w³ is even and entire with h(0) = 1/3.
    auto h = njet_t{};
    if (std::abs(w.body()) < 0.5) {
        // h = Σ_m w^{2m} [1/(2m+2)! − 1/(2m+3)!]; ten terms reach 1e-21 at |w| = 1/2
        auto const w2 = w * w;
        auto pw = njet_t{cplx{1.0}};
        auto fact = 2.0; // (2m+2)!
        for (int m = 0; m < 10; ++m) {
            h += pw * (1.0 / fact) * (1.0 - 1.0 / double(2 * m + 3));
            pw *= w2;
            fact *= double(2 * m + 3) * double(2 * m + 4);
        }
    } else {
        auto const ep = exp(w);
        auto const em = exp(-1.0 * w);
        h = (w * (ep + em) - (ep - em)) * 0.5 * inverse(w * w * w);
    }
    return 3.0 * pre * h;
}

namespace detail {

    auto half_plane_fourier(std::span<njet_t const> a, njet_t const& mu,
                            quadrature_config_t const& cfg) -> njet_t
    {
        auto const mu_body = mu.body().real();
        if (mu_body < 0.0) return njet_t{};
        auto const decay = 0.5 * double(a.size());

        auto leg = [&](cplx phase) {
            auto f = [&, phase](double xi) {
                auto const t = phase * xi;
                auto val = exp(mu * (cplx{0.0, -1.0} * t));
                for (auto const& aj : a) val *= pow(aj - cplx{0.0, 1.0} * t, -0.5);
                return val;
            };
            return integrate_half_line<njet_t>(f, decay, cfg).value * phase;
        };

        auto const right = leg(std::polar(1.0, -pi / 4.0));
        auto const left = leg(std::polar(1.0, -3.0 * pi / 4.0));
        return right - left;
    }

} // namespace detail

namespace {

    /// common setup for the degenerate-spectrum O(3)/O(4) evaluators
    struct shifted_args_t
    {
        std::vector<njet_t> offsets; ///< c − σ_j, real body ≥ 1
        njet_t mu;                   ///< |ω| with jets
        double c;
        njet_t r_trace_part;         ///< r21 · Σ s  (original arguments)
    };

    auto prepare_shifted(std::span<njet_t const> s, njet_t const& r11, njet_t const& r21,
                         char const* name) -> shifted_args_t
    {
        for (auto const& sj : s)
            if (std::abs(sj.body().imag()) > 1e-9 * (1.0 + std::abs(sj.body().real())))
                throw std::invalid_argument{std::string{name} + ": spectrum bodies must be real"};
        auto const omega = r11 - r21;
        auto const ob = omega.body();
        if (std::abs(ob) < 1e-10)
            throw std::domain_error{std::string{name} + ": degenerate spectrum r11 = r21"};

        auto const flip = ob.real() < 0.0;
        auto out = shifted_args_t{};
        out.mu = flip ? -1.0 * omega : omega;
        auto cmax = 0.0;
        for (auto const& sj : s) {
            auto const sigma = flip ? -1.0 * sj : sj;
            cmax = std::max(cmax, sigma.body().real());
        }
        out.c = cmax + 1.0;
        for (auto const& sj : s) out.offsets.push_back(out.c - (flip ? -1.0 * sj : sj));
        out.r_trace_part = r21 * sum(s);
        return out;
    }

} // namespace

auto phi3_o3_deg(std::span<njet_t const> s, njet_t const& r11, njet_t const& r21,
                 quadrature_config_t const& cfg) -> njet_t
{
    if (s.size() != 3) throw std::invalid_argument{"phi3_o3_deg: expects three eigenvalues"};
    auto const p = prepare_shifted(s, r11, r21, "phi3_o3_deg");
    auto const line = detail::half_plane_fourier(p.offsets, p.mu, cfg);
    return exp(p.r_trace_part + p.mu * p.c) * line * inverse(sqrt(p.mu));
}

auto phi4_o4_deg(std::span<njet_t const> s, njet_t const& r11, njet_t const& r21,
                 quadrature_config_t const& cfg) -> njet_t
{
    if (s.size() != 4) throw std::invalid_argument{"phi4_o4_deg: expects four eigenvalues"};
    auto const p = prepare_shifted(s, r11, r21, "phi4_o4_deg");

    auto F = [&](njet_t const& x) { return detail::half_plane_fourier(p.offsets, x, cfg); };
    auto const f_mu = F(p.mu);
    auto const mu_body = p.mu.body().real();

    // ∬|t₁−t₂| e^{−iμΣt} Π = (2/π)[∫₀^μ λ^{−2}(F(μ)² − F(μ+λ)F(μ−λ))dλ + F(μ)²/μ]
    auto const f_mu_sq = f_mu * f_mu;
    auto lam_integrand = [&](double lam) {
        return (f_mu_sq - F(p.mu + lam) * F(p.mu - lam)) * (1.0 / (lam * lam));
    };
    auto const core = integrate_adaptive<njet_t>(lam_integrand, 0.0, mu_body, cfg);
    auto const dbl = (2.0 / pi) * (core.value + f_mu_sq * (1.0 / mu_body));

    return exp(p.r_trace_part + 2.0 * p.c * p.mu) * dbl * inverse(p.mu);
}

} // namespace sbf
