#include "fp_poly.hpp"

#include <algorithm>

namespace belyikit::fp {

u64 powm(u64 base, u64 e, u64 p) {
    u64 acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = mulm(acc, base, p);
        base = mulm(base, base, p);
        e >>= 1;
    }
    return acc;
}

u64 powm(u64 base, const Integer& e, u64 p) {
    u64 acc = 1 % p;
    base %= p;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        acc = mulm(acc, acc, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = mulm(acc, base, p);
    }
    return acc;
}

u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly from_zpoly(const ZPoly& f, u64 p) {
    Poly out(f.c.size());
    Integer pz(static_cast<unsigned long>(p));
    for (size_t i = 0; i < f.c.size(); ++i) {
        Integer r = f.c[i] % pz;
        if (r < 0) r += pz;
        out[i] = r.get_ui();
    }
    trim(out);
    return out;
}

Poly make_monic(const Poly& f, u64 p) {
    if (f.empty()) return f;
    u64 inv = invm(lc(f), p);
    return mul_scalar(f, inv, p);
}

Poly add(const Poly& a, const Poly& b, u64 p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        out[i] = addm(x, y, p);
    }
    trim(out);
    return out;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < out.size(); ++i) {
        u64 x = i < a.size() ? a[i] : 0;
        u64 y = i < b.size() ? b[i] : 0;
        out[i] = subm(x, y, p);
    }
    trim(out);
    return out;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = addm(out[i + j], mulm(a[i], b[j], p), p);
    }
    trim(out);
    return out;
}

Poly mul_scalar(const Poly& a, u64 s, u64 p) {
    s %= p;
    if (s == 0) return {};
    Poly out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = mulm(a[i], s, p);
    trim(out);
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den, u64 p) {
    if (den.empty()) throw std::domain_error("fp divmod by zero");
    if (deg(num) < deg(den)) return {{}, num};
    Poly rem = num;
    Poly quo(num.size() - den.size() + 1, 0);
    u64 inv = invm(lc(den), p);
    for (int k = deg(num); k >= deg(den); --k) {
        u64 c = mulm(rem[k], inv, p);
        if (c == 0) continue;
        quo[k - deg(den)] = c;
        for (size_t j = 0; j < den.size(); ++j)
            rem[k - deg(den) + j] = subm(rem[k - deg(den) + j], mulm(c, den[j], p), p);
    }
    trim(rem);
    trim(quo);
    return {quo, rem};
}

Poly gcd(Poly a, Poly b, u64 p) {
    while (!b.empty()) {
        Poly r = divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

Poly derivative(const Poly& f, u64 p) {
    if (f.size() <= 1) return {};
    Poly out(f.size() - 1);
    for (size_t k = 1; k < f.size(); ++k) out[k - 1] = mulm(f[k], k % p, p);
    trim(out);
    return out;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& f, u64 p) {
    Poly acc{1};
    Poly b = divmod(base, f, p).second;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (size_t i = bits; i-- > 0;) {
        acc = divmod(mul(acc, acc, p), f, p).second;
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = divmod(mul(acc, b, p), f, p).second;
    }
    return acc;
}

u64 resultant(Poly a, Poly b, u64 p) {
    if (a.empty() || b.empty()) return 0;
    u64 res = 1;
    bool negate = false;
    while (deg(b) > 0) {
        Poly r = divmod(a, b, p).second;
        int da = deg(a), db = deg(b), dr = deg(r);  // dr = -1 when r = 0
        if (r.empty()) return 0;
        res = mulm(res, powm(lc(b), static_cast<u64>(da - dr), p), p);
        if ((da & 1) && (db & 1)) negate = !negate;
        a = std::move(b);
        b = std::move(r);
    }
    res = mulm(res, powm(b[0], static_cast<u64>(deg(a)), p), p);
    return negate ? subm(0, res, p) : res;
}

ExtGcd ext_gcd(const Poly& a, const Poly& b, u64 p) {
    Poly r0 = a, r1 = b;
    Poly s0{1}, s1{}, t0{}, t1{1};
    trim(r0);
    trim(r1);
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) return {r0, s0, t0};
    u64 inv = invm(lc(r0), p);
    return {mul_scalar(r0, inv, p), mul_scalar(s0, inv, p), mul_scalar(t0, inv, p)};
}

namespace {

// xorshift64*, fixed seed: splitting choices must be reproducible.
struct Rng {
    u64 state;
    explicit Rng(u64 seed) : state(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    u64 next() {
        state ^= state >> 12;
        state ^= state << 25;
        state ^= state >> 27;
        return state * 0x2545F4914F6CDD1DULL;
    }
};

Poly random_poly(Rng& rng, int degree, u64 p) {
    Poly out(degree + 1);
    for (auto& c : out) c = rng.next() % p;
    trim(out);
    return out;
}

void equal_degree_split(const Poly& f, int d, u64 p, Rng& rng, std::vector<Poly>& out) {
    if (deg(f) == d) {
        out.push_back(make_monic(f, p));
        return;
    }
    // Cantor-Zassenhaus: gcd(a^((p^d-1)/2) - 1, f) splits with probability ~1/2.
    Integer pd = pow_integer(Integer(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
    Integer e = (pd - 1) / 2;
    for (;;) {
        Poly a = random_poly(rng, deg(f) - 1, p);
        if (a.empty() || deg(a) < 1) continue;
        Poly t = powmod(a, e, f, p);
        if (t.empty())
            continue;
        t[0] = subm(t[0], 1, p);
        trim(t);
        if (t.empty()) continue;
        Poly g = gcd(f, t, p);
        if (deg(g) == 0 || deg(g) == deg(f)) continue;
        equal_degree_split(g, d, p, rng, out);
        equal_degree_split(divmod(f, g, p).first, d, p, rng, out);
        return;
    }
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, u64 p) {
    std::vector<Poly> out;
    Poly rest = make_monic(f, p);
    if (deg(rest) < 1) return out;
    Rng rng(p ^ (static_cast<u64>(deg(f)) << 32) ^ 0xB514E7ULL);
    // Distinct-degree: h = x^(p^d) mod rest, factors of degree d split off.
    Poly h{0, 1};  // x
    for (int d = 1; 2 * d <= deg(rest); ++d) {
        h = powmod(h, Integer(static_cast<unsigned long>(p)), rest, p);
        Poly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = subm(hx[1], 1, p);
        trim(hx);
        Poly g = gcd(rest, hx, p);  // hx = 0 means every factor has degree d
        if (!g.empty() && deg(g) > 0) {
            equal_degree_split(g, d, p, rng, out);
            rest = divmod(rest, g, p).first;
            h = divmod(h, rest, p).second;
        }
        if (deg(rest) < 1) break;
    }
    if (deg(rest) >= 1) out.push_back(rest);
    std::sort(out.begin(), out.end());
    return out;
}

u64 nth_kernel_prime(size_t index) {
    static std::vector<u64> cache;
    static const u64 start = (1ULL << 59) + 1;
    while (cache.size() <= index) {
        u64 candidate = cache.empty() ? start : cache.back() + 2;
        while (!is_prime(Integer(static_cast<unsigned long>(candidate)))) candidate += 2;
        cache.push_back(candidate);
    }
    return cache[index];
}

}  // namespace belyikit::fp
