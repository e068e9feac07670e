#include "belyikit/polyfactor.hpp"

#include <algorithm>

#include "belyikit/zpoly.hpp"
#include "fp_poly.hpp"

namespace belyikit {

UniPoly UniFactorization::recompose() const {
    UniPoly out = UniPoly::constant(unit);
    for (const auto& [f, e] : factors) out = out * pow_poly(f, static_cast<unsigned long>(e));
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// Z[x] arithmetic modulo an integer M (coefficients kept in [0, M)).

ZPoly zmod(const ZPoly& f, const Integer& m) {
    std::vector<Integer> v(f.c.size());
    for (size_t k = 0; k < v.size(); ++k) {
        v[k] = f.c[k] % m;
        if (v[k] < 0) v[k] += m;
    }
    return ZPoly(std::move(v));
}

ZPoly zsym(const ZPoly& f, const Integer& m) {
    std::vector<Integer> v(f.c.size());
    for (size_t k = 0; k < v.size(); ++k) {
        v[k] = f.c[k] % m;
        if (v[k] < 0) v[k] += m;
        if (v[k] * 2 > m) v[k] -= m;
    }
    return ZPoly(std::move(v));
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(a * b, m); }
ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(a + b, m); }
ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) { return zmod(a - b, m); }

// Division by a monic polynomial, all coefficients mod m.
std::pair<ZPoly, ZPoly> zdivmod_monic(const ZPoly& num, const ZPoly& den, const Integer& m) {
    if (den.is_zero() || den.lc() != 1)
        throw std::logic_error("zdivmod_monic: denominator must be monic");
    if (num.degree() < den.degree()) return {ZPoly(), zmod(num, m)};
    std::vector<Integer> rem(num.c);
    std::vector<Integer> quo(num.degree() - den.degree() + 1, Integer(0));
    int dd = den.degree();
    for (int k = num.degree(); k >= dd; --k) {
        Integer c = rem[k] % m;
        if (c < 0) c += m;
        if (c == 0) continue;
        quo[k - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den.c[j];
    }
    return {zmod(ZPoly(std::move(quo)), m), zmod(ZPoly(std::move(rem)), m)};
}

// ---------------------------------------------------------------------------
// Hensel lifting (quadratic), non-monic g / monic h pair.

struct HenselPair {
    ZPoly g, h, s, t;  // f = g*h, s*g + t*h = 1, all mod the current modulus
};

// One quadratic step: from modulus m to m2 (m2 divides m^2).
HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Integer& m2) {
    const ZPoly& g = in.g;
    const ZPoly& h = in.h;
    const ZPoly& s = in.s;
    const ZPoly& t = in.t;
    ZPoly e = zsub(f, g * h, m2);
    auto [q, r] = zdivmod_monic(zmul(s, e, m2), h, m2);
    ZPoly gstar = zadd(zadd(zmul(t, e, m2), zmul(q, g, m2), m2), g, m2);
    ZPoly hstar = zadd(h, r, m2);
    ZPoly eprime = zsub(zadd(zmul(s, gstar, m2), zmul(t, hstar, m2), m2),
                        ZPoly({Integer(1)}), m2);
    auto [q2, r2] = zdivmod_monic(zmul(s, eprime, m2), hstar, m2);
    ZPoly sstar = zsub(s, r2, m2);
    ZPoly tstar = zsub(zsub(t, zmul(t, eprime, m2), m2), zmul(q2, gstar, m2), m2);
    return {gstar, hstar, sstar, tstar};
}

// Lift f = g0*h0 (mod p) to modulus target (a power of p), h monic.
HenselPair hensel_lift_pair(const ZPoly& f, const ZPoly& g0, const ZPoly& h0,
                            const Integer& p, const Integer& target) {
    fp::u64 pu = Integer(p).get_ui();
    fp::ExtGcd bez = fp::ext_gcd(fp::from_zpoly(g0, pu), fp::from_zpoly(h0, pu), pu);
    if (fp::deg(bez.g) != 0)
        throw std::logic_error("hensel_lift_pair: factors not coprime mod p");
    auto to_z = [](const fp::Poly& q) {
        std::vector<Integer> v(q.size());
        for (size_t i = 0; i < q.size(); ++i) v[i] = Integer(static_cast<unsigned long>(q[i]));
        return ZPoly(std::move(v));
    };
    HenselPair cur{zmod(g0, p), zmod(h0, p), to_z(bez.s), to_z(bez.t)};
    // Quadratic chain capped at target: a step from m to any m2 with
    // m | m2 | m^2 is valid, and f is only known modulo target.
    Integer m = p;
    while (m < target) {
        Integer m2 = m * m;
        if (m2 > target) m2 = target;
        cur = hensel_step(f, cur, m2);
        m = m2;
    }
    return cur;
}

// Multifactor lift: f == (prod of facs) mod p, all facs monic except possibly
// facs[0] (which carries the leading coefficient). Returns factors mod target.
void hensel_lift_tree(const ZPoly& f, const std::vector<ZPoly>& facs, size_t lo, size_t hi,
                      const Integer& p, const Integer& target, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(zmod(f, target));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    ZPoly g0({Integer(1)}), h0({Integer(1)});
    for (size_t i = lo; i < mid; ++i) g0 = zmod(g0 * facs[i], p);
    for (size_t i = mid; i < hi; ++i) h0 = zmod(h0 * facs[i], p);
    HenselPair lifted = hensel_lift_pair(zmod(f, target), g0, h0, p, target);
    hensel_lift_tree(lifted.g, facs, lo, mid, p, target, out);
    hensel_lift_tree(lifted.h, facs, mid, hi, p, target, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus on a primitive squarefree integer polynomial.

Integer norm_inf(const ZPoly& f) {
    Integer m = 0;
    for (const auto& c : f.c)
        if (abs(c) > m) m = abs(c);
    return m;
}

Integer isqrt_ceil(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) r += 1;
    return r;
}

bool zpoly_less(const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t k = 0; k < a.c.size(); ++k)
        if (a.c[k] != b.c[k]) return a.c[k] < b.c[k];
    return false;
}

std::vector<ZPoly> zassenhaus_squarefree(const ZPoly& f) {
    if (f.degree() == 1) return {f};
    const Integer l = f.lc();

    // Prime selection: smallest odd primes keeping f squarefree mod p; among
    // the first few usable ones take the one with the fewest modular factors.
    struct Choice {
        fp::u64 p;
        std::vector<fp::Poly> factors;
    };
    std::vector<Choice> choices;
    unsigned long candidate = 3;
    int examined = 0;
    while (choices.size() < 4 && examined < 300) {
        while (!is_prime(Integer(candidate))) candidate += 2;
        ++examined;
        fp::u64 p = candidate;
        candidate += 2;
        if (mpz_divisible_ui_p(l.get_mpz_t(), p)) continue;
        fp::Poly fp_f = fp::from_zpoly(f, p);
        if (fp::deg(fp::gcd(fp_f, fp::derivative(fp_f, p), p)) != 0) continue;
        choices.push_back({p, fp::factor_squarefree(fp::make_monic(fp_f, p), p)});
        if (choices.back().factors.size() == 1) return {f};  // irreducible mod p
    }
    if (choices.empty()) throw std::logic_error("zassenhaus: no usable prime found");
    const Choice& best = *std::min_element(
        choices.begin(), choices.end(), [](const Choice& a, const Choice& b) {
            if (a.factors.size() != b.factors.size()) return a.factors.size() < b.factors.size();
            return a.p < b.p;
        });
    const Integer p(static_cast<unsigned long>(best.p));

    // Mignotte-style bound on factor coefficients (leading coefficient folded in).
    int n = f.degree();
    Integer bound = isqrt_ceil(Integer(n + 1)) * pow_integer(Integer(2), static_cast<unsigned long>(n)) *
                    norm_inf(f) * abs(l);
    Integer target = p;
    while (target < 2 * bound + 1) target *= p;

    // Attach the leading coefficient to the first modular factor and lift.
    std::vector<ZPoly> modular;
    modular.reserve(best.factors.size());
    for (const auto& mf : best.factors) {
        std::vector<Integer> v(mf.size());
        for (size_t i = 0; i < mf.size(); ++i) v[i] = Integer(static_cast<unsigned long>(mf[i]));
        modular.emplace_back(std::move(v));
    }
    modular[0] = zmod(Integer(l % p) * modular[0], p);
    std::vector<ZPoly> lifted;
    hensel_lift_tree(zmod(f, target), modular, 0, modular.size(), p, target, lifted);

    // Normalize every lifted factor monic mod target.
    Integer linv;
    for (auto& g : lifted) {
        if (mpz_invert(linv.get_mpz_t(), g.lc().get_mpz_t(), target.get_mpz_t()) == 0)
            throw std::logic_error("zassenhaus: leading coefficient not invertible");
        g = zmod(linv * g, target);
    }
    std::sort(lifted.begin(), lifted.end(), zpoly_less);

    // The recombination divisions are exact, but a broken lift would surface
    // as a silently reducible "irreducible" leftover; verify the lift now.
    ZPoly check({l});
    for (const auto& g : lifted) check = zmul(check, g, target);
    if (zmod(f - check, target).is_zero() == false)
        throw std::logic_error("zassenhaus: Hensel lift verification failed");

    // Subset recombination, smallest cardinality first.
    std::vector<ZPoly> result;
    ZPoly remaining = f;
    Integer lcur = remaining.lc();
    size_t trials = 0;
    size_t size = 1;
    while (2 * size <= lifted.size()) {
        bool found = false;
        std::vector<size_t> idx(size);
        for (size_t i = 0; i < size; ++i) idx[i] = i;
        for (;;) {
            if (++trials > (1u << 22))
                throw resource_error("zassenhaus: recombination explosion");
            ZPoly prod({lcur});
            for (size_t i : idx) prod = zmul(prod, lifted[i], target);
            ZPoly cand = primitive_part(zsym(prod, target));
            if (!cand.is_zero() && cand.degree() >= 1 && divides(cand, remaining)) {
                result.push_back(cand);
                remaining = divide_exact(remaining, cand);
                lcur = remaining.lc();
                std::vector<ZPoly> rest;
                for (size_t i = 0, j = 0; i < lifted.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    rest.push_back(lifted[i]);
                }
                lifted = std::move(rest);
                found = true;
                break;
            }
            // next subset of the same size
            size_t k = size;
            while (k > 0 && idx[k - 1] == lifted.size() - size + (k - 1)) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (size_t j = k; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++size;
    }
    if (remaining.degree() >= 1) result.push_back(primitive_part(remaining));
    std::sort(result.begin(), result.end(), zpoly_less);
    return result;
}

// Yun squarefree decomposition over Q: f = prod h_i^i.
std::vector<std::pair<UniPoly, long>> yun_squarefree(const UniPoly& f) {
    std::vector<std::pair<UniPoly, long>> parts;
    UniPoly u = gcd_poly(f, f.derivative());
    if (u.degree() == 0) {
        parts.emplace_back(f, 1);
        return parts;
    }
    UniPoly v = divmod(f, u).first;
    UniPoly w = divmod(f.derivative(), u).first;
    long i = 1;
    while (v.degree() > 0) {
        UniPoly z = w - v.derivative();
        UniPoly h = gcd_poly(v, z);
        if (h.degree() > 0) parts.emplace_back(h, i);
        v = divmod(v, h).first;
        w = divmod(z, h).first;
        ++i;
    }
    return parts;
}

}  // namespace

UniFactorization factor_unipoly(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_unipoly: zero polynomial");
    if (f.degree() > kFactorDegreeCap)
        throw resource_error("factor_unipoly: degree exceeds cap " +
                             std::to_string(kFactorDegreeCap));
    UniFactorization out;
    out.unit = f.leading();
    if (f.degree() < 1) return out;
    for (const auto& [part, mult] : yun_squarefree(f)) {
        ZPoly prim = to_integer_poly(part).second;
        for (const auto& zf : zassenhaus_squarefree(prim))
            out.factors.emplace_back(to_unipoly(zf).monic(), mult);
    }
    if (!(out.recompose() == f)) throw std::logic_error("factor_unipoly: recomposition mismatch");
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int k = 0; k <= a.first.degree(); ++k)
            if (a.first.coeff(k) != b.first.coeff(k)) return a.first.coeff(k) < b.first.coeff(k);
        return a.second < b.second;
    });
    return out;
}

bool is_irreducible_unipoly(const UniPoly& f) {
    if (f.degree() < 1) return false;
    UniFactorization fac = factor_unipoly(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

}  // namespace belyikit
