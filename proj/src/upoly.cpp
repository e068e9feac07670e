#include "belyikit/upoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "belyikit/polyfactor.hpp"
#include "belyikit/zpoly.hpp"

namespace belyikit {

namespace {
void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
}  // namespace

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

UniPoly UniPoly::constant(const Rational& c) {
    return c == 0 ? UniPoly() : UniPoly({c});
}

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::monomial(const Rational& c, size_t k) {
    if (c == 0) return UniPoly();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& a) { return UniPoly({-a, Rational(1)}); }

Rational UniPoly::coeff(size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

bool UniPoly::is_monic() const { return !is_zero() && coeffs_.back() == 1; }

Rational UniPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return (Rational(1) / leading()) * (*this);
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
    for (size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a) { return Rational(-1) * a; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& a) {
    if (c == 0) return UniPoly();
    std::vector<Rational> v(a.coeffs());
    for (auto& e : v) e *= c;
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem(num.coeffs());
    int dd = den.degree();
    if (num.degree() < dd) return {UniPoly(), num};
    std::vector<Rational> quo(num.degree() - dd + 1, Rational(0));
    const Rational inv_lead = Rational(1) / den.leading();
    for (int k = num.degree(); k >= dd; --k) {
        Rational c = rem[k] * inv_lead;
        if (c == 0) continue;
        quo[k - dd] = c;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= c * den.coeff(j);
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly gcd_poly(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly pa = to_integer_poly(a).second;
    ZPoly pb = to_integer_poly(b).second;
    return to_unipoly(gcd_zpoly(pa, pb)).monic();
}

UniPoly compose_poly(const UniPoly& f, const UniPoly& g) {
    UniPoly acc;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
        acc = acc * g + UniPoly::constant(*it);
    return acc;
}

UniPoly pow_poly(const UniPoly& f, unsigned long e) {
    UniPoly acc = UniPoly::constant(Rational(1));
    UniPoly base = f;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

P1Point P1Point::of(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return P1Point(std::move(c));
}

const Rational& P1Point::value() const {
    if (infinite_) throw std::domain_error("value() of the point at infinity");
    return value_;
}

bool P1Point::less(const P1Point& a, const P1Point& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    return a.value() < b.value();
}

ClosedPoint ClosedPoint::infinity() { return ClosedPoint(); }

ClosedPoint ClosedPoint::rational(const Rational& a) {
    ClosedPoint p;
    p.infinite_ = false;
    p.minpoly_ = UniPoly::linear_root(a);
    return p;
}

ClosedPoint ClosedPoint::of_irreducible(UniPoly monic_irreducible) {
    if (monic_irreducible.degree() < 1 || !monic_irreducible.is_monic())
        throw std::domain_error("closed point requires a monic polynomial of degree >= 1");
    ClosedPoint p;
    p.infinite_ = false;
    p.minpoly_ = std::move(monic_irreducible);
    return p;
}

const UniPoly& ClosedPoint::minimal_poly() const {
    if (infinite_) throw std::domain_error("minimal_poly() of the point at infinity");
    return minpoly_;
}

std::optional<P1Point> ClosedPoint::rational_point() const {
    if (infinite_) return P1Point::infinity();
    if (minpoly_.degree() != 1) return std::nullopt;
    return P1Point::of(-minpoly_.coeff(0));
}

bool ClosedPoint::less(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.is_infinity()) return false;
    if (b.is_infinity()) return true;
    if (a.minpoly_.degree() != b.minpoly_.degree())
        return a.minpoly_.degree() < b.minpoly_.degree();
    for (int k = 0; k <= a.minpoly_.degree(); ++k) {
        if (a.minpoly_.coeff(k) != b.minpoly_.coeff(k))
            return a.minpoly_.coeff(k) < b.minpoly_.coeff(k);
    }
    return false;
}

long Divisor::degree() const {
    long out = 0;
    for (const auto& [p, m] : terms) out += m * p.degree();
    return out;
}

long Divisor::support_point_count() const {
    long out = 0;
    for (const auto& [p, m] : terms) out += p.degree();
    return out;
}

long Divisor::multiplicity_at(const ClosedPoint& p) const {
    for (const auto& [q, m] : terms)
        if (q == p) return m;
    return 0;
}

void Divisor::add(const ClosedPoint& p, long mult) {
    if (mult == 0) return;
    for (auto& [q, m] : terms)
        if (q == p) {
            m += mult;
            return;
        }
    terms.emplace_back(p, mult);
}

void Divisor::normalize() {
    std::erase_if(terms, [](const auto& t) { return t.second == 0; });
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return ClosedPoint::less(a.first, b.first); });
}

RatFunc::RatFunc() : num_(), den_(UniPoly::constant(Rational(1))) {}

RatFunc::RatFunc(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = UniPoly();
        den_ = UniPoly::constant(Rational(1));
        return;
    }
    UniPoly g = gcd_poly(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    Rational lead = den.leading();
    num_ = (Rational(1) / lead) * num;
    den_ = (Rational(1) / lead) * den;
}

RatFunc RatFunc::poly(UniPoly p) { return RatFunc(std::move(p), UniPoly::constant(Rational(1))); }

RatFunc RatFunc::constant(const Rational& c) { return poly(UniPoly::constant(c)); }

RatFunc RatFunc::identity() { return poly(UniPoly::x()); }

int RatFunc::degree() const { return std::max(num_.degree(), den_.degree()); }

P1Point RatFunc::value_at_infinity() const {
    int dn = num_.degree(), dd = den_.degree();
    if (dn > dd) return P1Point::infinity();
    if (dn < dd) return P1Point::of(Rational(0));
    return P1Point::of(num_.leading() / den_.leading());
}

P1Point RatFunc::eval(const P1Point& x) const {
    if (x.is_infinity()) return value_at_infinity();
    Rational n = num_.eval(x.value());
    Rational d = den_.eval(x.value());
    if (d == 0) return P1Point::infinity();
    return P1Point::of(n / d);
}

RatFunc RatFunc::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of the zero function");
    return RatFunc(den_, num_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num() * b.num(), a.den() * b.den());
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero function");
    return RatFunc(a.num() * b.den(), a.den() * b.num());
}

RatFunc compose(const RatFunc& g, const RatFunc& f) {
    if (f.is_constant()) throw std::domain_error("compose: inner map is constant");
    int n = g.degree();
    if (n == 0) return g;
    const UniPoly& A = f.num();
    const UniPoly& B = f.den();
    std::vector<UniPoly> apow(n + 1), bpow(n + 1);
    apow[0] = UniPoly::constant(Rational(1));
    bpow[0] = UniPoly::constant(Rational(1));
    for (int k = 1; k <= n; ++k) {
        apow[k] = apow[k - 1] * A;
        bpow[k] = bpow[k - 1] * B;
    }
    UniPoly N, D;
    for (int k = 0; k <= n; ++k) {
        Rational gn = g.num().coeff(k);
        Rational gd = g.den().coeff(k);
        if (gn != 0) N = N + gn * (apow[k] * bpow[n - k]);
        if (gd != 0) D = D + gd * (apow[k] * bpow[n - k]);
    }
    RatFunc out(N, D);
    if (out.degree() != g.degree() * f.degree())
        throw std::logic_error("compose: degree bookkeeping failed");
    return out;
}

namespace {

// Multiplicity of the rational root a (0 when not a root).
long root_multiplicity(const UniPoly& p, const Rational& a) {
    if (p.is_zero()) throw std::domain_error("root multiplicity in zero polynomial");
    long mult = 0;
    UniPoly cur = p;
    while (cur.degree() >= 1 && cur.eval(a) == 0) {
        cur = divmod(cur, UniPoly::linear_root(a)).first;
        ++mult;
    }
    return mult;
}

// ord_x(f) for nonzero f: multiplicity of zero (>0) or pole (<0) at x.
long ord_of(const RatFunc& f, const P1Point& x) {
    if (f.is_zero()) throw std::domain_error("order of the zero function");
    if (x.is_infinity()) return f.den().degree() - f.num().degree();
    return root_multiplicity(f.num(), x.value()) - root_multiplicity(f.den(), x.value());
}

}  // namespace

long order_at(const RatFunc& f, const P1Point& x, const P1Point& v) {
    if (v.is_infinity()) {
        return -ord_of(f, x);
    }
    RatFunc shifted = f - RatFunc::constant(v.value());
    if (shifted.is_zero()) throw std::domain_error("order_at: function is identically v");
    return ord_of(shifted, x);
}

Divisor divisor_of_zeros(const RatFunc& f) {
    if (f.is_zero()) throw std::domain_error("divisor of zeros of the zero function");
    Divisor out;
    if (f.num().degree() >= 1) {
        UniFactorization fac = factor_unipoly(f.num());
        for (const auto& [poly, mult] : fac.factors)
            out.add(ClosedPoint::of_irreducible(poly), mult);
    }
    long at_inf = f.den().degree() - f.num().degree();
    if (at_inf > 0) out.add(ClosedPoint::infinity(), at_inf);
    out.normalize();
    return out;
}

Divisor divisor_of_poles(const RatFunc& f) {
    if (f.is_zero()) return Divisor{};
    return divisor_of_zeros(f.reciprocal());
}

namespace {

// Inverse of b modulo the irreducible monic m (gcd(b, m) = 1 required).
UniPoly invert_mod(const UniPoly& b, const UniPoly& m) {
    // Half-extended Euclid over Q[x].
    UniPoly r0 = m, r1 = divmod(b, m).second;
    UniPoly t0, t1 = UniPoly::constant(Rational(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw std::domain_error("invert_mod: arguments not coprime");
    return divmod((Rational(1) / r0.coeff(0)) * t0, m).second;
}

}  // namespace

std::vector<CriticalPoint> ramification_profile(const RatFunc& f) {
    if (f.is_constant()) throw std::domain_error("ramification profile of a constant map");
    const UniPoly& A = f.num();
    const UniPoly& B = f.den();
    UniPoly wronskian = A.derivative() * B - A * B.derivative();
    std::vector<CriticalPoint> out;
    if (!wronskian.is_zero() && wronskian.degree() >= 1) {
        UniFactorization fac = factor_unipoly(wronskian);
        for (const auto& [m, mult] : fac.factors) {
            CriticalPoint cp;
            cp.point = ClosedPoint::of_irreducible(m);
            cp.index = mult + 1;
            if (divmod(B, m).second.is_zero()) {
                cp.value = P1Point::infinity();
            } else {
                UniPoly v = divmod(A * invert_mod(B, m), m).second;
                if (v.degree() <= 0) {
                    cp.value = P1Point::of(v.is_zero() ? Rational(0) : v.coeff(0));
                } else {
                    cp.value = std::nullopt;  // nonrational critical value
                }
            }
            out.push_back(std::move(cp));
        }
    }
    P1Point vinf = f.value_at_infinity();
    long einf = order_at(f, P1Point::infinity(), vinf);
    if (einf >= 2) out.push_back({ClosedPoint::infinity(), vinf, einf});
    std::sort(out.begin(), out.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
        return ClosedPoint::less(a.point, b.point);
    });
    long rh = 0;
    for (const auto& cp : out) rh += (cp.index - 1) * cp.point.degree();
    if (rh != 2L * f.degree() - 2)
        throw std::logic_error("ramification profile violates Riemann-Hurwitz");
    return out;
}

// ---------------------------------------------------------------------------
// printing

namespace {

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

std::string to_string(const UniPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (k == 0) {
            os << rational_str(a);
        } else {
            if (a != 1) os << rational_str(a) << "*";
            os << "x";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::string to_string(const RatFunc& f) {
    if (f.den().degree() == 0 && f.den().coeff(0) == 1) return to_string(f.num());
    return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

std::string to_string(const P1Point& p) {
    return p.is_infinity() ? "oo" : rational_str(p.value());
}

std::string to_string(const ClosedPoint& p) {
    return p.is_infinity() ? "oo" : to_string(p.minimal_poly());
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct Parser {
    std::string s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::domain_error("parse error at position " + std::to_string(pos) + ": " + why);
    }

    void skip_ws() {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos;
        return true;
    }

    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }

    Integer parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return Integer(s.substr(start, pos - start));
    }

    unsigned long parse_exponent() {
        Integer e = parse_uint();
        if (e > 4096) fail("exponent too large");
        return e.get_ui();
    }

    RatFunc parse_atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RatFunc inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos;
            return RatFunc::identity();
        }
        if (isdigit(static_cast<unsigned char>(c))) {
            return RatFunc::constant(Rational(parse_uint()));
        }
        fail("expected 'x', a number, or '('");
    }

    RatFunc parse_pow() {
        RatFunc base = parse_atom();
        if (accept('^')) {
            unsigned long e = parse_exponent();
            RatFunc acc = RatFunc::constant(Rational(1));
            RatFunc b = base;
            while (e > 0) {
                if (e & 1) acc = acc * b;
                if (e >>= 1) b = b * b;
            }
            return acc;
        }
        return base;
    }

    RatFunc parse_term() {
        RatFunc acc = parse_pow();
        for (;;) {
            if (accept('*')) {
                acc = acc * parse_pow();
            } else if (accept('/')) {
                acc = acc / parse_pow();
            } else {
                return acc;
            }
        }
    }

    RatFunc parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        RatFunc acc = parse_term();
        if (neg) acc = RatFunc::constant(Rational(-1)) * acc;
        for (;;) {
            if (accept('+')) {
                acc = acc + parse_term();
            } else if (accept('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }
};

}  // namespace

RatFunc parse_ratfunc(const std::string& text) {
    Parser p{text};
    RatFunc out = p.parse_expr();
    if (!p.at_end()) p.fail("trailing input");
    return out;
}

UniPoly parse_unipoly(const std::string& text) {
    RatFunc f = parse_ratfunc(text);
    if (f.den().degree() != 0)
        throw std::domain_error("expected a polynomial, got a rational function");
    return f.num();
}

P1Point parse_p1point(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "oo" || s == "+oo" || s == "-oo") return P1Point::infinity();
    return P1Point::of(parse_rational(s));
}

}  // namespace belyikit
