// SPDX-License-Identifier: MIT
/**
    \file
    \brief rank-lowering radial recursion for the supermatrix Bessel functions

    One recursion level expresses the UOSp(k₁/2k₂) function through the
    UOSp(k₁−1/2k₂) one: the first bosonic r-eigenvalue decouples against an
    integral over a lower-rank spectrum s′ whose bosonic part interlaces the
    bosonic part of s and whose fermionic part is nilpotently shifted,
    is′_{p2} = is_{p2} + ε_p.  The Grassmann content reduces to one Berezin
    extraction per fermionic pair, carried exactly through the jet algebra;
    the bosonic content is a (k₁−1)-fold interlaced quadrature whose
    inverse-square-root face singularities are absorbed by the sin²
    substitution of integrate_interlaced.  Iterating strips all bosonic
    r-eigenvalues and terminates in the compact USp(2k₂) kernel.

    The per-step normalization combines the target-rank constant g_norm with
    fixed measure factors; the residual numeric constants are pinned by the
    closed-form cross-checks and frozen in the implementation.
*/
#ifndef SBF_RECURSION_HPP
#define SBF_RECURSION_HPP

#include <functional>
#include <vector>

#include <sbf/nilpotent.hpp>
#include <sbf/quadrature.hpp>
#include <sbf/spectrum.hpp>

namespace sbf {

/// evaluator of a lower-rank function on nilpotent-extended spectra
using lower_evaluator_t = std::function<njet_t(nilpotent_spectrum_t const&)>;

/**
    \brief terminal USp(2k₂) kernel of the iteration.

    Returns an evaluator over purely fermionic jet spectra (k₁ = 0): for
    k₂ = 1 the rank-one symplectic exponential exp(2 s₁₂ r₁₂); for k₂ = 2 the
    USp(4) average phi2_usp4 evaluated directly on the fermionic eigenvalue
    jets (the rotation back to the compact domain is already contained in
    that kernel's quaternion-doubled convention — pinned by the rank-(1,2)
    closed-form cross-check).  s2 fixes the expected shape; r2 is captured.
    k₂ > 2 is unsupported and throws.
*/
auto base_case(std::vector<double> const& s2, std::vector<double> const& r2)
    -> lower_evaluator_t;

/**
    \brief one recursion level: strips r_first against a rank-lowered integral.

    Computes C(k₁,k₂)·∫ dμ(s′, s) exp((trg s − trg s′) r_first) φ_lower(s′)
    where s′ runs over spectra with k₁−1 bosonic eigenvalues interlacing the
    bosonic eigenvalues of s and fermionic eigenvalues is_{p2} + ε_p; all k₂
    nilpotent pairs are Berezin-extracted, then the interlaced bosonic
    quadrature is performed.  φ_lower must accept spectra of shape
    (k₁−1, k₂); est_error is propagated from the quadrature.

    Throws std::domain_error on degenerate bosonic or fermionic eigenvalues
    of s, accuracy_error if the quadrature cannot meet its tolerance.
*/
auto recursion_step(lower_evaluator_t const& phi_lower, super_spectrum_t const& s,
                    double r_first, quadrature_config_t const& cfg = {})
    -> bessel_value_t;

/**
    \brief full iteration down to the USp(2k₂) base case.

    Applies recursion_step once per bosonic r-eigenvalue, in ascending order,
    nesting the quadratures; each level draws fresh nilpotent generators, so
    the total generator budget is k₁·k₂.  k₁ ≤ 3 is enforced as a cost guard
    (std::invalid_argument beyond); k₂ ∈ {1, 2} as in base_case.
*/
auto recursion_full(super_spectrum_t const& s, super_spectrum_t const& r,
                    quadrature_config_t const& cfg = {}) -> bessel_value_t;

} // namespace sbf

#endif // SBF_RECURSION_HPP
