// SPDX-License-Identifier: MIT
/**
    \file ordinary.hpp
    \brief Ordinary-space matrix Bessel evaluators over O(n) and USp(2n), plus
           brute-force Haar-integration oracles.

    These functions are the base cases of the radial recursion and the
    ingredients of the closed-form evaluators.  Every evaluator accepts
    nilpotent-extended arguments, so directional derivatives are exact jet
    reads rather than finite differences.  The Haar samplers provide
    independent Monte-Carlo oracles for all of them.

    The single-line integral representations (three- and four-fold products of
    inverse square roots) are evaluated on a rotated contour: the integrand is
    analytic off the downward branch cuts, and legs tilted into the decaying
    sector turn an algebraically decaying oscillatory tail into an
    exponentially decaying smooth one.  A common offset keeps every radicand's
    real part at least one, which both removes branch-crossing issues for
    non-positive spectra and makes the evaluation manifestly stable; the value
    is exactly independent of the offset, and tests pin that invariance.
*/
#pragma once

#include <random>
#include <span>

#include <Eigen/Dense>

#include <sbf/nilpotent.hpp>
#include <sbf/quadrature.hpp>

namespace sbf {

enum class group_family_t { orthogonal, unitary_symplectic };

/// compact matrix group over which a brute-force Haar average is taken
struct group_spec_t
{
    group_family_t family{group_family_t::orthogonal};
    int n{1}; ///< O(n) matrix dimension, or half the USp(2n) dimension
};

/**
    \brief One Haar-distributed group element as a complex matrix.

    O(n): QR of a real Gaussian matrix with the R-diagonal sign fix.
    USp(2n): Gram–Schmidt of a quaternionic Gaussian matrix, embedded as a
    2n x 2n complex matrix in interleaved 2x2 blocks [[a, b], [-conj b, conj a]].
    The draw order is fixed, so streams are deterministic per RNG state.
*/
auto haar_sample(group_spec_t const& g, std::mt19937_64& rng) -> Eigen::MatrixXcd;

/// sampler functor suitable for mc_mean (seed discipline lives there)
inline auto haar_sampler(group_spec_t const& g)
{
    return [g](std::mt19937_64& rng) { return haar_sample(g, rng); };
}

/// ∏_{i<j}(x_j − x_i), raised to an integer power (negative powers invert)
auto vandermonde(std::span<njet_t const> vals, int power) -> njet_t;

/// USp(2) average of exp(tr u†SuR) with S = s·1₂, R = r·1₂: a pure exponential
inline auto phi1_usp2(njet_t const& s, njet_t const& r) -> njet_t
{
    return exp(2.0 * s * r);
}

/**
    \brief Unnormalized O(2) average: 2π · exp(½ tr s · tr r) · I₀(z/2)
           with z = (s₁−s₂)(r₁−r₂).
*/
auto phi2_o2(std::span<njet_t const> s, std::span<njet_t const> r) -> njet_t;

/**
    \brief USp(4) average of exp(tr u†SuR) with quaternion-doubled spectra
           S = diag(s₁,s₁,s₂,s₂), R = diag(r₁,r₁,r₂,r₂).

    Equals 3·e^{Σs·Σr}(cosh w/w² − sinh w/w³) with w = (s₂−s₁)(r₂−r₁); the
    expression is regular at coinciding eigenvalues and is evaluated by its
    even Taylor series when |w| is small.  Normalized to 1 at r = 0.
*/
auto phi2_usp4(std::span<njet_t const> s2, std::span<njet_t const> r2) -> njet_t;

/**
    \brief Unnormalized O(3) function at the degenerate spectrum
           r = diag(r11, r21, r21), as a single contour integral
           e^{r21 tr s} e^{ωc} ∫dt e^{−iωt} ∏_j (c − s_j − it)^{−1/2} / √ω,
           ω = r11 − r21, with offset c > max s.

    The value is offset-independent; ω < 0 is handled by the exact reflection
    (ω, s) → (−ω, −s).  Proportional to the Euler-angle group integral with a
    fixed frame-volume constant (pinned by the oracle tests).
*/
auto phi3_o3_deg(std::span<njet_t const> s, njet_t const& r11, njet_t const& r21,
                 quadrature_config_t const& cfg = {}) -> njet_t;

/**
    \brief Unnormalized O(4) function at the doubly degenerate spectrum
           r = diag(r11, r11, r21, r21):
           e^{r21 tr s} e^{2ωc} ∬dt₁dt₂ |t₁−t₂| e^{−iω(t₁+t₂)}
           ∏_{j,n}(c − s_j − it_n)^{−1/2} / ω.

    The single 1/ω normalization is pinned by two independent requirements:
    the s↔r scale symmetry value(λs, r) = value(s, λr) and the constant Haar
    relation avg = value/(16π) (both exercised by the tests).

    The |t₁−t₂| factor is traded for a single finite integral of products of
    one-dimensional transforms F(μ): with F(μ) = ∫dt e^{−iμt}∏_j(c−s_j−it)^{−1/2}
    (which vanishes identically for μ < 0),
       ∬ = (2/π)[ ∫₀^ω dλ λ^{−2}(F(ω)² − F(ω+λ)F(ω−λ)) + F(ω)²/ω ].
*/
auto phi4_o4_deg(std::span<njet_t const> s, njet_t const& r11, njet_t const& r21,
                 quadrature_config_t const& cfg = {}) -> njet_t;

namespace detail {

    /**
        \brief F(mu) = ∫_{−∞}^{∞} dt e^{−i·mu·t} ∏_j (a_j − it)^{−1/2} for
               offsets a_j with Re body ≥ 1 and Re body(mu) ≥ 0.

        All branch points lie on the negative imaginary axis at depth ≥ 1, so
        the contour folds onto two legs at −45°/−135° where the integrand
        decays like e^{−mu·ξ/√2}.  For mu of negative body the transform is
        exactly zero (the integrand is analytic in the closed upper half-plane
        and decays); callers rely on that convention.
    */
    auto half_plane_fourier(std::span<njet_t const> a, njet_t const& mu,
                            quadrature_config_t const& cfg) -> njet_t;

} // namespace detail

} // namespace sbf
