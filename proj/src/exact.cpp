#include "kissing/exact.hpp"

#include <algorithm>
#include <deque>

namespace kissing {

Rational rational_binomial(int n, int k) {
    if (k < 0 || k > n) return Rational(0);
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return Rational(num) / Rational(den);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
    return numerator(r).str() + (denominator(r) == 1 ? std::string() : "/" + denominator(r).str());
}

RationalPoly to_rational(const Polynomial& p) {
    std::vector<Rational> c;
    c.reserve(p.coeffs().size());
    for (double v : p.coeffs()) c.emplace_back(v);
    return RationalPoly(std::move(c));
}

Polynomial to_double_poly(const RationalPoly& p) {
    std::vector<double> c;
    c.reserve(p.coeffs().size());
    for (const Rational& v : p.coeffs()) c.push_back(to_double(v));
    return Polynomial(std::move(c));
}

namespace {

RationalPoly poly_rem(const RationalPoly& a, const RationalPoly& b) {
    RationalPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational q = r.leading() / b.leading();
        int shift = r.degree() - b.degree();
        std::vector<Rational> sc(static_cast<std::size_t>(shift) + 1, Rational(0));
        sc.back() = q;
        r = r - b * RationalPoly(std::move(sc));
    }
    return r;
}

std::vector<RationalPoly> sturm_chain(const RationalPoly& p) {
    std::vector<RationalPoly> chain;
    chain.push_back(p);
    RationalPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const RationalPoly& a = chain[chain.size() - 2];
        const RationalPoly& b = chain.back();
        RationalPoly r = poly_rem(a, b);
        if (r.is_zero()) break;
        chain.push_back(-r);
        if (chain.back().degree() == 0) break;
    }
    return chain;
}

int sign_variations(const std::vector<RationalPoly>& chain, const Rational& x) {
    int vars = 0;
    int prev = 0;
    for (const RationalPoly& q : chain) {
        Rational v = q(x);
        int s = v == 0 ? 0 : (v > 0 ? 1 : -1);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

struct RootIsolator {
    const RationalPoly& p;
    std::vector<RationalPoly> chain;

    explicit RootIsolator(const RationalPoly& poly) : p(poly), chain(sturm_chain(poly)) {}

    int count(const Rational& a, const Rational& b) const {
        return sign_variations(chain, a) - sign_variations(chain, b);
    }

    // midpoint of (a, b) that is not a root of p
    Rational split_point(const Rational& a, const Rational& b) const {
        Rational m = (a + b) / 2;
        for (int k = 3; k < 64; ++k) {
            if (!(p(m) == 0)) return m;
            m = a + (b - a) * Rational(k, 2 * k + 1);
        }
        throw std::logic_error("split_point: could not avoid roots");
    }

    // disjoint ordered brackets, each holding exactly one distinct root
    std::vector<std::pair<Rational, Rational>> isolate(const Rational& a, const Rational& b) const {
        std::vector<std::pair<Rational, Rational>> out;
        std::deque<std::pair<Rational, Rational>> work{{a, b}};
        while (!work.empty()) {
            auto [l, r] = work.front();
            work.pop_front();
            int c = count(l, r);
            if (c == 0) continue;
            if (c == 1) {
                out.emplace_back(l, r);
                continue;
            }
            Rational m = split_point(l, r);
            work.emplace_back(l, m);
            work.emplace_back(m, r);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

bool nonpositive_on(const RationalPoly& p, const Rational& lo, const Rational& hi,
                    Rational* witness) {
    if (p.is_zero()) return true;
    if (p(lo) > 0) {
        if (witness) *witness = lo;
        return false;
    }
    if (p(hi) > 0) {
        if (witness) *witness = hi;
        return false;
    }
    if (p.degree() == 0) return true;

    // enclosing interval with non-root endpoints
    Rational LO = lo - 1;
    while (p(LO) == 0) LO -= Rational(1, 3);
    Rational HI = hi + 1;
    while (p(HI) == 0) HI += Rational(1, 3);

    RootIsolator iso(p);
    auto brackets = iso.isolate(LO, HI);

    // sample every root-free segment that meets [lo, hi]
    std::vector<std::pair<Rational, Rational>> segments;
    Rational cur = LO;
    for (const auto& [l, r] : brackets) {
        segments.emplace_back(cur, l);
        cur = r;
    }
    segments.emplace_back(cur, HI);

    for (const auto& [a, b] : segments) {
        Rational sa = a < lo ? lo : a;
        Rational sb = b > hi ? hi : b;
        if (sa > sb) continue;
        Rational x = (sa + sb) / 2;
        Rational v = p(x);
        if (v == 0) continue;  // x coincides with an interval endpoint root
        if (v > 0) {
            if (witness) *witness = x;
            return false;
        }
    }
    return true;
}

}  // namespace kissing
