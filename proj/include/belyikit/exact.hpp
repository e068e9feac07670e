#ifndef BELYIKIT_EXACT_HPP
#define BELYIKIT_EXACT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace belyikit {

/// Exact unbounded integers and rationals. Rationals are kept canonical:
/// den > 0, gcd(|num|, den) = 1 (mpq canonical form).
using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a computation exceeds a configured resource cap
/// (composition degree, factorization degree, subset search).
struct resource_error : std::runtime_error {
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

struct PrimePower {
    Integer prime;
    long exponent;  // nonzero; negative entries appear in rational factorizations

    bool operator==(const PrimePower&) const = default;
};

/// Prime-exponent map, primes strictly increasing.
struct Factorization {
    std::vector<PrimePower> entries;

    bool empty() const { return entries.size() == 0; }
    /// Product of p^e. Only meaningful when all exponents are nonnegative.
    Integer recompose() const;
    /// Exponent of p (0 when absent).
    long exponent_of(const Integer& p) const;
    bool operator==(const Factorization&) const = default;
};

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& text);

/// Deterministic Miller-Rabin certification, exact for n < 2^64 and backed by
/// a fixed extended base set beyond that (desk-scale inputs stay far below).
bool is_prime(const Integer& n);

/// Trial division up to a fixed bound, then Pollard rho (Brent) splitting with
/// Miller-Rabin certification of every reported prime. Deterministic.
/// Factors |n|; n = 0 is a domain error.
Factorization factor(const Integer& n);

/// Signed prime-exponent map of a nonzero rational.
Factorization factor_rational(const Rational& q);

/// v_p(q) = v_p(num) - v_p(den). q = 0 or composite p is a domain error.
long valuation(const Integer& p, const Rational& q);

/// All primes dividing |n| (n != 0), ascending.
std::vector<Integer> prime_support(const Integer& n);

/// True when every prime factor of |n| lies in the sorted list `primes`
/// (n = +-1 is supported by any list, including the empty one).
bool is_supported_on(const Integer& n, const std::vector<Integer>& primes);

/// Natural log of n >= 1 as a decimal string with `sig_digits` significant
/// digits, correctly rounded (MPFR round-to-nearest with guard precision).
std::string log_approx(const Integer& n, int sig_digits);

/// Same, for a positive rational.
std::string log_approx(const Rational& q, int sig_digits);

Integer pow_integer(const Integer& base, unsigned long e);
Rational pow_rational(const Rational& base, long e);

}  // namespace belyikit

#endif
