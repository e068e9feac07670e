#include "belyikit/zpoly.hpp"

#include <algorithm>

#include "belyikit/upoly.hpp"
#include "fp_poly.hpp"

namespace belyikit {

void ZPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Integer& ZPoly::lc() const {
    if (c.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c.back();
}

Integer ZPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational ZPoly::eval_rational(const Rational& x) const {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

ZPoly ZPoly::derivative() const {
    if (c.size() <= 1) return ZPoly();
    std::vector<Integer> v(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) v[k - 1] = Integer(static_cast<long>(k)) * c[k];
    return ZPoly(std::move(v));
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Integer> v(std::max(a.c.size(), b.c.size()), Integer(0));
    for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
    return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<Integer> v(std::max(a.c.size(), b.c.size()), Integer(0));
    for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
    return ZPoly(std::move(v));
}

ZPoly operator-(const ZPoly& a) { return Integer(-1) * a; }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Integer> v(a.c.size() + b.c.size() - 1, Integer(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) v[i + j] += a.c[i] * b.c[j];
    }
    return ZPoly(std::move(v));
}

ZPoly operator*(const Integer& s, const ZPoly& a) {
    if (s == 0) return ZPoly();
    std::vector<Integer> v(a.c);
    for (auto& e : v) e *= s;
    return ZPoly(std::move(v));
}

Integer content(const ZPoly& a) {
    Integer g = 0;
    for (const auto& e : a.c) g = gcd(g, e);
    return g;
}

ZPoly primitive_part(const ZPoly& a) {
    if (a.is_zero()) return a;
    Integer g = content(a);
    if (a.lc() < 0) g = -g;
    std::vector<Integer> v(a.c.size());
    for (size_t k = 0; k < a.c.size(); ++k) mpz_divexact(v[k].get_mpz_t(), a.c[k].get_mpz_t(), g.get_mpz_t());
    return ZPoly(std::move(v));
}

ZPoly divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact division by zero polynomial");
    if (a.is_zero()) return ZPoly();
    if (a.degree() < b.degree()) throw std::domain_error("exact division: degree mismatch");
    std::vector<Integer> rem(a.c);
    std::vector<Integer> quo(a.degree() - b.degree() + 1, Integer(0));
    int db = b.degree();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        Integer q;
        Integer r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rem[k].get_mpz_t(), b.lc().get_mpz_t());
        if (r != 0) throw std::domain_error("exact division failed");
        quo[k - db] = q;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.c[j];
    }
    for (const auto& e : rem)
        if (e != 0) throw std::domain_error("exact division failed");
    return ZPoly(std::move(quo));
}

bool divides(const ZPoly& b, const ZPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    try {
        (void)divide_exact(a, b);
        return true;
    } catch (const std::domain_error&) {
        return false;
    }
}

ZPoly gcd_zpoly(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    Integer cont = gcd(content(a), content(b));
    ZPoly pa = primitive_part(a);
    ZPoly pb = primitive_part(b);
    if (pa.degree() == 0 || pb.degree() == 0) return ZPoly({cont});
    Integer lc_gcd = gcd(pa.lc(), pb.lc());

    // Modular gcd: compute mod successive primes, CRT candidates of minimal
    // degree, verify by exact division.
    int best_deg = std::min(pa.degree(), pb.degree()) + 1;
    Integer modulus = 1;
    std::vector<Integer> crt;  // symmetric-range coefficients of lc_gcd * monic gcd
    for (size_t pi = 0;; ++pi) {
        if (pi > 1000) throw std::logic_error("gcd_zpoly: modular loop failed to stabilize");
        fp::u64 p = fp::nth_kernel_prime(pi);
        Integer pz(static_cast<unsigned long>(p));
        if (mpz_divisible_p(pa.lc().get_mpz_t(), pz.get_mpz_t()) ||
            mpz_divisible_p(pb.lc().get_mpz_t(), pz.get_mpz_t()))
            continue;
        fp::Poly gp = fp::gcd(fp::from_zpoly(pa, p), fp::from_zpoly(pb, p), p);
        if (fp::deg(gp) == 0) return ZPoly({cont});
        if (fp::deg(gp) > best_deg) continue;  // unlucky prime
        gp = fp::mul_scalar(gp, static_cast<fp::u64>(mpz_fdiv_ui(lc_gcd.get_mpz_t(), p)), p);
        if (fp::deg(gp) < best_deg) {
            best_deg = fp::deg(gp);
            modulus = 1;
            crt.assign(gp.size(), Integer(0));
        }
        // Incremental CRT into symmetric range.
        Integer new_modulus = modulus * pz;
        for (size_t k = 0; k < crt.size(); ++k) {
            Integer target(static_cast<unsigned long>(k < gp.size() ? gp[k] : 0));
            Integer cur = crt[k] % pz;
            if (cur < 0) cur += pz;
            Integer delta = (target - cur) % pz;
            if (delta < 0) delta += pz;
            Integer inv;
            if (modulus == 1) {
                crt[k] = target;
            } else {
                if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
                    throw std::logic_error("gcd_zpoly: CRT inversion failed");
                crt[k] = crt[k] + modulus * ((delta * inv) % pz);
            }
            crt[k] %= new_modulus;
            if (crt[k] * 2 > new_modulus) crt[k] -= new_modulus;
            if (crt[k] * 2 <= -new_modulus) crt[k] += new_modulus;
        }
        modulus = new_modulus;
        ZPoly candidate = primitive_part(ZPoly(std::vector<Integer>(crt)));
        if (candidate.degree() == best_deg && divides(candidate, pa) && divides(candidate, pb))
            return cont * candidate;
    }
}

namespace {

// 2-norm squared of the coefficient vector.
Integer norm2_sq(const ZPoly& f) {
    Integer s = 0;
    for (const auto& e : f.c) s += e * e;
    return s;
}

Integer isqrt_ceil(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

}  // namespace

Integer resultant_zpoly(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    if (a.degree() == 0) return pow_integer(a.c[0], static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return pow_integer(b.c[0], static_cast<unsigned long>(a.degree()));
    // Hadamard bound, then CRT over word-size primes.
    Integer bound = pow_integer(isqrt_ceil(norm2_sq(a)), static_cast<unsigned long>(b.degree())) *
                    pow_integer(isqrt_ceil(norm2_sq(b)), static_cast<unsigned long>(a.degree()));
    bound = 2 * bound + 1;
    Integer modulus = 1;
    Integer res = 0;
    for (size_t pi = 0; modulus < bound; ++pi) {
        if (pi > 5000) throw std::logic_error("resultant_zpoly: prime pool exhausted");
        fp::u64 p = fp::nth_kernel_prime(pi);
        Integer pz(static_cast<unsigned long>(p));
        if (mpz_divisible_p(a.lc().get_mpz_t(), pz.get_mpz_t()) ||
            mpz_divisible_p(b.lc().get_mpz_t(), pz.get_mpz_t()))
            continue;
        fp::u64 rp = fp::resultant(fp::from_zpoly(a, p), fp::from_zpoly(b, p), p);
        Integer target(static_cast<unsigned long>(rp));
        if (modulus == 1) {
            res = target;
        } else {
            Integer cur = res % pz;
            if (cur < 0) cur += pz;
            Integer delta = (target - cur) % pz;
            if (delta < 0) delta += pz;
            Integer inv;
            if (mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t()) == 0)
                throw std::logic_error("resultant_zpoly: CRT inversion failed");
            res += modulus * ((delta * inv) % pz);
        }
        modulus *= pz;
        res %= modulus;
        if (res * 2 > modulus) res -= modulus;
        if (res * 2 <= -modulus) res += modulus;
    }
    return res;
}

Integer discriminant_zpoly(const ZPoly& f) {
    if (f.degree() < 1) throw std::domain_error("discriminant needs degree >= 1");
    if (f.degree() == 1) return 1;
    Integer res = resultant_zpoly(f, f.derivative());
    Integer q;
    mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.lc().get_mpz_t());
    long n = f.degree();
    if (((n * (n - 1)) / 2) % 2 == 1) q = -q;
    return q;
}

std::pair<Rational, ZPoly> to_integer_poly(const UniPoly& f) {
    if (f.is_zero()) return {Rational(0), ZPoly()};
    Integer den_lcm = 1;
    for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, Integer(c.get_den()));
    std::vector<Integer> v(f.coeffs().size());
    for (size_t k = 0; k < v.size(); ++k) {
        Rational scaled = f.coeffs()[k] * Rational(den_lcm);
        v[k] = Integer(scaled.get_num());
    }
    ZPoly raw(std::move(v));
    Integer cont = content(raw);
    if (raw.lc() < 0) cont = -cont;
    ZPoly prim = primitive_part(raw);
    return {make_rational(cont, den_lcm), prim};
}

UniPoly to_unipoly(const ZPoly& f) {
    std::vector<Rational> v(f.c.size());
    for (size_t k = 0; k < v.size(); ++k) v[k] = Rational(f.c[k]);
    return UniPoly(std::move(v));
}

}  // namespace belyikit
