#ifndef BELYIKIT_POLYFACTOR_HPP
#define BELYIKIT_POLYFACTOR_HPP

#include <utility>
#include <vector>

#include "belyikit/upoly.hpp"

namespace belyikit {

/// f = unit * prod factor^multiplicity with monic irreducible factors over Q,
/// sorted canonically (degree, then coefficients).
struct UniFactorization {
    Rational unit;
    std::vector<std::pair<UniPoly, long>> factors;

    UniPoly recompose() const;
};

/// Factor a nonzero polynomial over Q into monic irreducibles.
/// Squarefree split (Yun), then Zassenhaus: factorization mod a good prime
/// (Cantor-Zassenhaus), quadratic Hensel lifting past the Mignotte bound, and
/// subset recombination. Input degree is capped at 64.
UniFactorization factor_unipoly(const UniPoly& f);

bool is_irreducible_unipoly(const UniPoly& f);

/// Degree cap enforced by factor_unipoly.
inline constexpr int kFactorDegreeCap = 64;

}  // namespace belyikit

#endif
