// SPDX-License-Identifier: MIT
/**
    \file
    \brief global normalization constants of the supermatrix Bessel functions

    The group average is normalized a posteriori by matching the t → 0 limit of
    the Gaussian diffusion kernel built from Φ(−is/t, r).  That fixes one constant
    Ĝ per (k₁, k₂) and one constant Ĉ per k₁ for the purely bosonic (orthogonal
    group) factor.  Both are explicit products of powers of 2 and π with factorials
    and half-integer Γ values.
*/
#ifndef SBF_NORMS_HPP
#define SBF_NORMS_HPP

#include <cstddef>

namespace sbf {

/// Ĝ(k₁,k₂): closed-form normalization of Φ_{k₁ 2k₂}
auto g_norm(std::size_t k1, std::size_t k2) -> double;

/// Ĉ(k₁): normalization of the orthogonal-group Bessel asymptotics
auto c_orthogonal(std::size_t k1) -> double;

/// exponent γ(k₁,k₂) of t in the t → 0 limit of Φ(−is/t, r)
auto asym_t_exponent(std::size_t k1, std::size_t k2) -> double;

} // namespace sbf

#endif // SBF_NORMS_HPP
