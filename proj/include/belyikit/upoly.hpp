#ifndef BELYIKIT_UPOLY_HPP
#define BELYIKIT_UPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "belyikit/exact.hpp"

namespace belyikit {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly x();
    static UniPoly monomial(const Rational& c, size_t k);
    /// x - a
    static UniPoly linear_root(const Rational& a);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(size_t k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_monic() const;

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    bool operator==(const UniPoly&) const = default;

private:
    std::vector<Rational> coeffs_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& c, const UniPoly& a);

/// Euclidean division; den must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
/// Monic gcd over Q.
UniPoly gcd_poly(const UniPoly& a, const UniPoly& b);
/// Substitute g into f.
UniPoly compose_poly(const UniPoly& f, const UniPoly& g);
UniPoly pow_poly(const UniPoly& f, unsigned long e);

/// A point of P^1(Q): a rational value or the point at infinity.
class P1Point {
public:
    P1Point() : infinite_(true) {}
    static P1Point infinity() { return P1Point(); }
    static P1Point of(const Rational& v);

    bool is_infinity() const { return infinite_; }
    const Rational& value() const;

    bool operator==(const P1Point&) const = default;
    /// Finite points by value, infinity last.
    static bool less(const P1Point& a, const P1Point& b);

private:
    explicit P1Point(Rational v) : infinite_(false), value_(std::move(v)) {}
    bool infinite_;
    Rational value_;
};

/// A closed point of P^1 over Q: a monic irreducible polynomial, or infinity.
/// Irreducibility is certified by the factorization routine that builds these.
class ClosedPoint {
public:
    ClosedPoint() : infinite_(true) {}  // defaults to the point at infinity
    static ClosedPoint infinity();
    static ClosedPoint rational(const Rational& a);
    /// Caller asserts irreducibility (factorizer output).
    static ClosedPoint of_irreducible(UniPoly monic_irreducible);

    bool is_infinity() const { return infinite_; }
    int degree() const { return infinite_ ? 1 : minpoly_.degree(); }
    const UniPoly& minimal_poly() const;
    /// The P1Point when this closed point is rational (degree 1).
    std::optional<P1Point> rational_point() const;

    bool operator==(const ClosedPoint&) const = default;
    /// Finite points by (degree, coefficients), infinity last.
    static bool less(const ClosedPoint& a, const ClosedPoint& b);

private:
    bool infinite_ = false;
    UniPoly minpoly_;
};

/// Formal sum of closed points with nonzero multiplicities, sorted.
struct Divisor {
    std::vector<std::pair<ClosedPoint, long>> terms;

    /// Sum of mult * deg over all terms.
    long degree() const;
    /// Number of distinct Qbar-points in the support (sum of point degrees).
    long support_point_count() const;
    long multiplicity_at(const ClosedPoint& p) const;
    void add(const ClosedPoint& p, long mult);
    void normalize();

    bool operator==(const Divisor&) const = default;
};

/// Quotient of two polynomials, canonical: gcd(num, den) = 1, den monic.
class RatFunc {
public:
    RatFunc();  // the zero function
    RatFunc(UniPoly num, UniPoly den);
    static RatFunc poly(UniPoly p);
    static RatFunc constant(const Rational& c);
    static RatFunc identity();

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }

    /// Degree as a morphism P^1 -> P^1: max(deg num, deg den).
    int degree() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return degree() <= 0; }

    P1Point eval(const P1Point& x) const;
    /// Value at infinity by degree comparison.
    P1Point value_at_infinity() const;

    RatFunc reciprocal() const;

    bool operator==(const RatFunc&) const = default;

private:
    UniPoly num_;
    UniPoly den_;
};

RatFunc operator+(const RatFunc& a, const RatFunc& b);
RatFunc operator-(const RatFunc& a, const RatFunc& b);
RatFunc operator*(const RatFunc& a, const RatFunc& b);
RatFunc operator/(const RatFunc& a, const RatFunc& b);

/// g after f: (g o f). f must be non-constant.
RatFunc compose(const RatFunc& g, const RatFunc& f);

/// f*(0) as a divisor on P^1: finite zeros with multiplicity, plus infinity
/// with multiplicity deg(den) - deg(num) when that is positive.
Divisor divisor_of_zeros(const RatFunc& f);
Divisor divisor_of_poles(const RatFunc& f);

struct CriticalPoint {
    ClosedPoint point;
    /// Critical value when rational (or infinite); nullopt marks a
    /// nonrational critical value.
    std::optional<P1Point> value;
    long index;  // ramification index e >= 2

    bool operator==(const CriticalPoint&) const = default;
};

/// All points with ramification index >= 2, including infinity, with exact
/// indices. Conjugate irrational critical points are grouped as ClosedPoints.
std::vector<CriticalPoint> ramification_profile(const RatFunc& f);

/// Order of vanishing of (f - v) at a rational point, with the usual pole
/// conventions (v may be infinity; x may be infinity).
long order_at(const RatFunc& f, const P1Point& x, const P1Point& v);

std::string to_string(const UniPoly& p);
std::string to_string(const RatFunc& f);
std::string to_string(const P1Point& p);
std::string to_string(const ClosedPoint& p);

/// Sparse textual form: `4*x - 4*x^2`, rational coefficients `27/4*x`,
/// parenthesized groups, and a top-level `/` for quotients.
UniPoly parse_unipoly(const std::string& text);
RatFunc parse_ratfunc(const std::string& text);
/// `a/b` or the token `oo` for infinity.
P1Point parse_p1point(const std::string& text);

}  // namespace belyikit

#endif
