#include "tusi/interval.hpp"

#include <algorithm>

namespace tusi {

Interval::Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw UsageError("interval with lo > hi");
}

Interval sqrt_enclosure(const Rational& r, const Rational& width) {
    if (r.sign() < 0) throw DomainError("sqrt_enclosure of a negative value");
    if (width.sign() <= 0) throw UsageError("sqrt_enclosure needs width > 0");
    if (r.is_zero()) return Interval(Rational(0));
    if (auto s = r.exact_sqrt()) return Interval(*s);

    // sqrt(n/d) = sqrt(n*d)/d; isqrt gives a unit-width seed over denominator d.
    mpz_class nd = r.num() * r.den();
    mpz_class s = sqrt(nd);
    Rational lo(s, r.den());
    Rational hi(mpz_class(s + 1), r.den());

    while (hi - lo > width) {
        Rational m = (lo + hi) / 2;
        if (m * m <= r) {
            lo = m;
        } else {
            hi = m;
        }
    }
    return Interval(lo, hi);
}

Interval iv_add(const Interval& a, const Interval& b) {
    return Interval(a.lo + b.lo, a.hi + b.hi);
}

Interval iv_sub(const Interval& a, const Interval& b) {
    return Interval(a.lo - b.hi, a.hi - b.lo);
}

Interval iv_mul(const Interval& a, const Interval& b) {
    Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    Rational lo = std::min(std::min(p1, p2), std::min(p3, p4));
    Rational hi = std::max(std::max(p1, p2), std::max(p3, p4));
    return Interval(lo, hi);
}

Interval iv_neg(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval iv_scale(const Interval& a, const Rational& k) {
    if (k.sign() >= 0) return Interval(a.lo * k, a.hi * k);
    return Interval(a.hi * k, a.lo * k);
}

Interval iv_offset(const Interval& a, const Rational& k) {
    return Interval(a.lo + k, a.hi + k);
}

Interval iv_sqrt(const Interval& a, const Rational& width) {
    if (a.hi.sign() < 0) throw DomainError("iv_sqrt of a negative interval");
    Rational lo = a.lo.sign() < 0 ? Rational(0) : a.lo;
    Interval slo = sqrt_enclosure(lo, width);
    Interval shi = sqrt_enclosure(a.hi, width);
    return Interval(slo.lo, shi.hi);
}

} // namespace tusi
