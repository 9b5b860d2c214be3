// SPDX-License-Identifier: MIT
/**
    \file
    \brief radial spectral data of one supermatrix argument, and shared supertrace helpers

    A diagonal argument is described by its k₁ bosonic eigenvalues s_{p1} (real
    symmetric block) and k₂ fermionic eigenvalues s_{p2} (self-dual block; each is
    twofold degenerate and stored once).  In every formula the fermionic eigenvalues
    enter through is_{p2}, so helpers expose them as purely imaginary complex values.
*/
#ifndef SBF_SPECTRUM_HPP
#define SBF_SPECTRUM_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <sbf/nilpotent.hpp>

namespace sbf {

struct super_spectrum_t
{
    std::vector<double> bosonic;  ///< s_{p1}, sorted non-decreasing
    std::vector<double> fermionic; ///< s_{p2}, one entry per twofold-degenerate pair

    super_spectrum_t() = default;
    super_spectrum_t(std::vector<double> bos, std::vector<double> fer)
        : bosonic{std::move(bos)}, fermionic{std::move(fer)}
    {
        if (bosonic.empty() && fermionic.empty())
            throw std::invalid_argument{"super_spectrum_t: empty spectrum"};
        for (std::size_t p = 1; p < bosonic.size(); ++p)
            if (bosonic[p] < bosonic[p - 1])
                throw std::invalid_argument{"super_spectrum_t: bosonic not sorted"};
    }

    auto k1() const -> std::size_t { return bosonic.size(); }
    auto k2() const -> std::size_t { return fermionic.size(); }

    /// is_{p2}: the fermionic eigenvalue as it appears in all rational expressions
    auto f(std::size_t p) const -> cplx { return cplx{0.0, fermionic[p]}; }
};

/**
    \brief spectrum whose fermionic eigenvalues carry nilpotent shifts.

    The bosonic entries stay real; each fermionic eigenvalue is an exact jet whose
    body plays the role of s_{p2} and whose soul holds nilpotent displacements (as
    produced by one level of the radial recursion).  Helpers mirror the plain
    spectrum: f(p) is the purely imaginary combination is_{p2} lifted to jets.
*/
struct nilpotent_spectrum_t
{
    std::vector<double> bosonic;   ///< ordered bosonic eigenvalues
    std::vector<njet_t> fermionic; ///< s_{p2} as jets: real bodies, nilpotent souls

    auto k1() const -> std::size_t { return bosonic.size(); }
    auto k2() const -> std::size_t { return fermionic.size(); }

    /// is_{p2} as a jet
    auto f(std::size_t p) const -> njet_t { return fermionic[p] * cplx{0.0, 1.0}; }
};

/// embeds a plain spectrum as a jet spectrum without souls
inline auto lift_spectrum(super_spectrum_t const& s, std::uint8_t universe = 0)
    -> nilpotent_spectrum_t
{
    auto n = nilpotent_spectrum_t{};
    n.bosonic = s.bosonic;
    for (auto const v : s.fermionic) n.fermionic.push_back(njet_t{cplx{v}, universe});
    return n;
}

/// value of a supermatrix Bessel function together with an accuracy estimate
struct bessel_value_t
{
    cplx value{};
    double est_error{0.0};
};

/// trg s = Σ s_{p1} − 2 Σ is_{p2}  (boson trace minus doubled fermion trace)
inline auto trg(super_spectrum_t const& s) -> cplx
{
    auto t = cplx{};
    for (auto const v : s.bosonic) t += v;
    for (auto const v : s.fermionic) t -= 2.0 * cplx{0.0, v};
    return t;
}

/// trg rs = Σ s_{p1} r_{p1} + 2 Σ s_{p2} r_{p2}  for diagonal arguments
inline auto trg_prod(super_spectrum_t const& s, super_spectrum_t const& r) -> double
{
    if (s.k1() != r.k1() || s.k2() != r.k2())
        throw std::invalid_argument{"trg_prod: dimension mismatch"};
    auto t = 0.0;
    for (std::size_t p = 0; p < s.k1(); ++p) t += s.bosonic[p] * r.bosonic[p];
    for (std::size_t p = 0; p < s.k2(); ++p) t += 2.0 * s.fermionic[p] * r.fermionic[p];
    return t;
}

/// trg s² = Σ s_{p1}² + 2 Σ s_{p2}²
inline auto trg_sq(super_spectrum_t const& s) -> double { return trg_prod(s, s); }

/// trg of a jet spectrum: Σ s_{p1} − 2 Σ is_{p2}
inline auto trg(nilpotent_spectrum_t const& s) -> njet_t
{
    auto t = njet_t{};
    for (auto const v : s.bosonic) t += cplx{v};
    for (auto const& v : s.fermionic) t -= v * cplx{0.0, 2.0};
    return t;
}

/// trg rs for a jet spectrum against a plain one: Σ s_{p1} r_{p1} + 2 Σ s_{p2} r_{p2}
inline auto trg_prod(nilpotent_spectrum_t const& s, super_spectrum_t const& r) -> njet_t
{
    if (s.k1() != r.k1() || s.k2() != r.k2())
        throw std::invalid_argument{"trg_prod: dimension mismatch"};
    auto t = njet_t{};
    for (std::size_t p = 0; p < s.k1(); ++p) t += cplx{s.bosonic[p] * r.bosonic[p]};
    for (std::size_t p = 0; p < s.k2(); ++p) t += s.fermionic[p] * (2.0 * r.fermionic[p]);
    return t;
}

/**
    \brief radial Jacobian B̃(s) of the flat measure in eigenvalue coordinates.

    B̃(s) = |Δ_{k₁}(s₁)| · Δ⁴_{k₂}(is₂) / ∏_{p,q} (s_{p1} − is_{q2})².

    Δ⁴ of purely imaginary entries is real and non-negative; the mixed denominator
    makes the value complex in general.
*/
inline auto berezinian(super_spectrum_t const& s) -> cplx
{
    auto num = 1.0;
    for (std::size_t p = 0; p < s.k1(); ++p)
        for (std::size_t q = p + 1; q < s.k1(); ++q)
            num *= std::abs(s.bosonic[p] - s.bosonic[q]);
    for (std::size_t p = 0; p < s.k2(); ++p)
        for (std::size_t q = p + 1; q < s.k2(); ++q) {
            auto const d = s.fermionic[p] - s.fermionic[q];
            num *= d * d * d * d; // (is_{p2} − is_{q2})⁴ = (s_{p2} − s_{q2})⁴
        }
    auto den = cplx{1.0};
    for (std::size_t p = 0; p < s.k1(); ++p)
        for (std::size_t q = 0; q < s.k2(); ++q) {
            auto const d = s.bosonic[p] - s.f(q);
            den *= d * d;
        }
    return num / den;
}

} // namespace sbf

#endif // SBF_SPECTRUM_HPP
