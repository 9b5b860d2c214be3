// SPDX-License-Identifier: MIT
/**
    \file
    \brief implementation of the closed-form normalization constants
*/
#include <sbf/norms.hpp>

#include <cmath>

namespace sbf {

auto g_norm(std::size_t k1, std::size_t k2) -> double
{
    auto const a = static_cast<double>(k1);
    auto const b = static_cast<double>(k2);
    // exponent of 2:  3k₂(k₂ − k₁) + k₁²/4 − 5k₂/2 − k₁/2
    auto const e2 = 3.0 * b * (b - a) + a * a / 4.0 - 2.5 * b - 0.5 * a;
    // exponent of π:  ((k₁ − 2k₂)² + 2k₁² − 2k₂) / 4
    auto const d  = a - 2.0 * b;
    auto const epi = (d * d + 2.0 * a * a - 2.0 * b) / 4.0;
    return std::pow(2.0, e2)
           / (std::pow(M_PI, epi) * std::tgamma(b + 1.0) * std::tgamma(a / 2.0));
}

auto c_orthogonal(std::size_t k1) -> double
{
    auto const a = static_cast<double>(k1);
    // Ĉ(k₁) = Γ(k₁/2) π^{k₁²/2 − k₁/4} / k₁!
    return std::tgamma(a / 2.0) * std::pow(M_PI, a * a / 2.0 - a / 4.0)
           / std::tgamma(a + 1.0);
}

auto asym_t_exponent(std::size_t k1, std::size_t k2) -> double
{
    auto const d = static_cast<double>(k1) - 2.0 * static_cast<double>(k2);
    return (d * d + d) / 4.0;
}

} // namespace sbf
