#ifndef BELYIKIT_ZPOLY_HPP
#define BELYIKIT_ZPOLY_HPP

// Integer-polynomial machinery backing factorization, resultants and
// discriminants. Internal layer; the public surface is upoly/polyfactor.

#include <utility>
#include <vector>

#include "belyikit/exact.hpp"

namespace belyikit {

class UniPoly;

/// Polynomial over Z, coefficients lowest degree first, trimmed.
struct ZPoly {
    std::vector<Integer> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<Integer> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Integer& lc() const;
    Integer coeff(size_t k) const { return k < c.size() ? c[k] : Integer(0); }

    Integer eval(const Integer& x) const;
    Rational eval_rational(const Rational& x) const;
    ZPoly derivative() const;

    bool operator==(const ZPoly&) const = default;
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const Integer& s, const ZPoly& a);

/// gcd of the coefficients (>= 0; 0 for the zero polynomial).
Integer content(const ZPoly& a);
/// a / content(a), sign-normalized to a positive leading coefficient.
ZPoly primitive_part(const ZPoly& a);

/// Exact division; throws std::domain_error when b does not divide a over Z.
ZPoly divide_exact(const ZPoly& a, const ZPoly& b);
/// True when b | a over Z (quotient discarded).
bool divides(const ZPoly& b, const ZPoly& a);

/// Pseudo-remainder tower gcd is avoided: this is a modular gcd with exact
/// division verification. Result is primitive with positive leading coeff.
ZPoly gcd_zpoly(const ZPoly& a, const ZPoly& b);

/// Resultant via the subresultant PRS (exact, deterministic).
Integer resultant_zpoly(const ZPoly& a, const ZPoly& b);
/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
Integer discriminant_zpoly(const ZPoly& f);

/// Clear denominators: f = content * primitive with primitive in Z[x],
/// positive leading coefficient.
std::pair<Rational, ZPoly> to_integer_poly(const UniPoly& f);
UniPoly to_unipoly(const ZPoly& f);

}  // namespace belyikit

#endif
