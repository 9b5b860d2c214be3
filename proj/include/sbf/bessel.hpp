// SPDX-License-Identifier: MIT
/**
    \file
    \brief closed-form supermatrix Bessel functions on UOSp(k₁/2k₂)

    Each phi_* evaluates the group average of exp(trg(u⁻¹ s u r)) over the
    orthosymplectic supergroup at diagonal arguments s = diag(s₁, is₂ ⊗ 1₂),
    r = diag(r₁, ir₂ ⊗ 1₂) in closed form, normalized by g_norm so that the
    short-time diffusion-kernel limit is exactly reproduced (see asym_limit).

    Conventions shared by all evaluators:
      - spectra are passed as super_spectrum_t; fermionic eigenvalues enter
        every rational expression through is_{p2} (super_spectrum_t::f);
      - each value is completed over the permutations of the fermionic
        doublets of r (the "exchange term"), which makes it symmetric under
        simultaneous doublet swaps;
      - all fermionic-difference denominators require distinct fermionic
        bodies; coincident ones raise std::domain_error;
      - the k₁ = 3, 4 evaluators require the twofold-degenerate bosonic
        r-patterns (a, b, b) and (a, a, b, b) and apply polynomial
        differential operators to the one-variable contour representations
        phi3_o3_deg / phi4_o4_deg; all derivatives are taken exactly through
        nilpotent jets, never by numerical differencing.
*/
#ifndef SBF_BESSEL_HPP
#define SBF_BESSEL_HPP

#include <sbf/nilpotent.hpp>
#include <sbf/quadrature.hpp>
#include <sbf/spectrum.hpp>

namespace sbf {

/**
    \brief normalization constant Ĝ(k₁, k₂) of the supergroup average.

    Ĝ = 2^{3k₂(k₂−k₁)+k₁²/4−5k₂/2−k₁/2} / (π^{((k₁−2k₂)²+2k₁²−2k₂)/4} k₂! Γ(k₁/2));
    fixed by matching the t → 0 limit of the diffusion kernel (asym_limit).
*/
auto g_norm(int k1, int k2) -> double;

/// leading asymptotic constant Ĉ^{(k₁)} = Γ(k₁/2) π^{k₁²/2−k₁/4} / k₁! of the
/// ordinary orthogonal-group average
auto c_muirhead(int k1) -> double;

/// k₁ = 1, k₂ = 1: Ĝ·(1 − 2(r₁₁−ir₁₂)(s₁₁−is₁₂))·exp(trg rs)
auto phi_12(super_spectrum_t const& s, super_spectrum_t const& r) -> bessel_value_t;

/**
    \brief k₁ = 2, k₂ = 1 in terms of the modified Bessel function I₀.

    Ĝ·exp(trg rs − z/2)·[4∏ⱼ(ir₁₂−r_{j1})(is₁₂−s_{j1})
      − Σ_q(is₁₂−s_{q1})·Σ_p(ir₁₂−r_{p1}) − z d/dz]·2π I₀(z/2),
    with z = (s₁₁−s₂₁)(r₁₁−r₂₁) built from the bosonic gaps and
    z d/dz I₀(z/2) = (z/2) I₁(z/2).
*/
auto phi_22(super_spectrum_t const& s, super_spectrum_t const& r) -> bessel_value_t;

/**
    \brief k₁ = 1, k₂ = 2: rational in the fermionic gaps.

    Ĝ·Σ_σ exp(s₁₁r₁₁ + 2Σ_p s_{p2}r_{σ(p)2})·
      [(Δ_s⁻²Δ_ρ⁻² + Δ_s⁻³Δ_ρ⁻³)·∏_p(2(is_{p2}−s₁₁)(ir_{σ(p)2}−r₁₁) − 1)
       − Δ_s⁻³Δ_ρ⁻³],
    where Δ_s = is₂₂−is₁₂, Δ_ρ is the corresponding (permuted) r-gap and σ
    runs over the two pairings of the fermionic doublets.
*/
auto phi_14(super_spectrum_t const& s, super_spectrum_t const& r) -> bessel_value_t;

/**
    \brief k₁ = 2, k₂ = 2: product structure of phi_22-type factors per
    fermionic pair plus two non-commutativity corrections, all analytic in
    z = (s₁₁−s₂₁)(r₁₁−r₂₁) through I₀(z/2) and I₁(z/2).
*/
auto phi_24(super_spectrum_t const& s, super_spectrum_t const& r) -> bessel_value_t;

/**
    \brief k₁ = 3, k₂ = 2 with bosonic r-pattern {a, b, b}.

    Polynomial first- and second-order differential operators in the bosonic
    eigenvalues of s act on the one-variable contour representation
    phi3_o3_deg(s₁, a, b); derivatives are evaluated exactly through jets.
*/
auto phi_34(super_spectrum_t const& s, super_spectrum_t const& r,
            quadrature_config_t const& cfg = {}) -> bessel_value_t;

/**
    \brief k₁ = 4, k₂ = 2 with bosonic r-pattern {a, a, b, b}; operators act
    on the double-contour representation phi4_o4_deg(s₁, a, b) through jets.
*/
auto phi_44(super_spectrum_t const& s, super_spectrum_t const& r,
            quadrature_config_t const& cfg = {}) -> bessel_value_t;

/**
    \name jet-argument overloads

    The same evaluators on spectra whose fermionic eigenvalues are nilpotent
    jets (nilpotent_spectrum_t).  All fermionic dependence is carried exactly
    through the jet algebra, so these serve as lower-level integrands of the
    radial recursion; with soul-free arguments they reduce to the plain
    overloads.  The bosonic gap variables stay real scalars throughout.
*/
///@{
auto phi_12(nilpotent_spectrum_t const& s, super_spectrum_t const& r) -> njet_t;
auto phi_22(nilpotent_spectrum_t const& s, super_spectrum_t const& r) -> njet_t;
auto phi_14(nilpotent_spectrum_t const& s, super_spectrum_t const& r) -> njet_t;
auto phi_24(nilpotent_spectrum_t const& s, super_spectrum_t const& r) -> njet_t;
auto phi_34(nilpotent_spectrum_t const& s, super_spectrum_t const& r,
            quadrature_config_t const& cfg = {}) -> njet_t;
auto phi_44(nilpotent_spectrum_t const& s, super_spectrum_t const& r,
            quadrature_config_t const& cfg = {}) -> njet_t;
///@}

/**
    \brief leading small-t prediction for the value at spectrum s/t.

    asym_limit(s, r, t) ≈ phi_{k₁2k₂}(s/t, r) as t → 0⁺:
      2^{k₁k₂} t^γ Ĉ^{(k₁)} Ĝ·det[exp(s_{n1}r_{m1}/t)]·det[exp(2s_{i2}r_{j2}/t)]
      / √(B̃(s)B̃(r)),   γ = ((k₁−2k₂)² + (k₁−2k₂))/4,
    with B̃ the radial Jacobian (berezinian).  All eigenvalue gaps must be
    nonzero; degenerate gaps raise std::domain_error.
*/
auto asym_limit(super_spectrum_t const& s, super_spectrum_t const& r, double t)
    -> bessel_value_t;

} // namespace sbf

#endif // SBF_BESSEL_HPP
