#ifndef BELYIKIT_FP_POLY_HPP
#define BELYIKIT_FP_POLY_HPP

// Dense polynomials over F_p (p an odd prime below 2^62), backing the modular
// gcd/resultant kernels and the Cantor-Zassenhaus factorizer.

#include <cstdint>
#include <vector>

#include "belyikit/exact.hpp"
#include "belyikit/zpoly.hpp"

namespace belyikit::fp {

using u64 = std::uint64_t;

inline u64 addm(u64 a, u64 b, u64 p) {
    u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 subm(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

inline u64 mulm(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<__uint128_t>(a) * b) % p);
}

u64 powm(u64 base, u64 e, u64 p);
u64 powm(u64 base, const Integer& e, u64 p);
u64 invm(u64 a, u64 p);

/// Coefficients lowest degree first, trimmed; empty vector = zero.
using Poly = std::vector<u64>;

void trim(Poly& f);
inline int deg(const Poly& f) { return static_cast<int>(f.size()) - 1; }
inline u64 lc(const Poly& f) { return f.back(); }

Poly from_zpoly(const ZPoly& f, u64 p);
Poly make_monic(const Poly& f, u64 p);
Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly mul_scalar(const Poly& a, u64 s, u64 p);
/// Division with remainder; den nonzero.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den, u64 p);
Poly gcd(Poly a, Poly b, u64 p);  // monic or zero
Poly derivative(const Poly& f, u64 p);
/// base^e mod (f, p); exponent may be huge.
Poly powmod(const Poly& base, const Integer& e, const Poly& f, u64 p);

/// Resultant of a and b over F_p via the Euclidean recurrence.
u64 resultant(Poly a, Poly b, u64 p);

struct ExtGcd {
    Poly g, s, t;  // s*a + t*b = g, g monic (or zero)
};
ExtGcd ext_gcd(const Poly& a, const Poly& b, u64 p);

/// Distinct-degree then equal-degree splitting of a squarefree monic f.
/// Deterministic: the internal splitting PRNG is seeded from (p, deg f).
std::vector<Poly> factor_squarefree(const Poly& f, u64 p);

/// Fixed deterministic sequence of odd primes used by the modular kernels.
/// index 0, 1, 2, ... yields distinct primes near 2^59.
u64 nth_kernel_prime(size_t index);

}  // namespace belyikit::fp

#endif
