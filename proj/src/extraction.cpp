#include "tusi/extraction.hpp"

#include <sstream>

#include "tusi/error.hpp"

namespace tusi {

namespace {

mpz_class base_pow(unsigned base, unsigned e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), base, e);
    return p;
}

// Nonnegative integer k split as int digits of k/base^frac and the frac
// digits of k mod base^frac (most significant first in both lists).
void split_digits(const mpz_class& k, unsigned base, unsigned frac,
                  std::vector<unsigned>& int_digits, std::vector<unsigned>& frac_digits) {
    mpz_class scale = base_pow(base, frac);
    mpz_class ip = k / scale;
    mpz_class fp = k % scale;
    frac_digits.assign(frac, 0);
    for (unsigned i = frac; i-- > 0;) {
        mpz_class d = fp % base;
        frac_digits[i] = static_cast<unsigned>(d.get_ui());
        fp /= base;
    }
    int_digits.clear();
    while (ip > 0) {
        mpz_class d = ip % base;
        int_digits.insert(int_digits.begin(), static_cast<unsigned>(d.get_ui()));
        ip /= base;
    }
}

int eval_sign(const QEPoly& p, const Rational& x) {
    return poly_eval(p, QuadExt(x)).sign();
}

} // namespace

Rational DigitString::value() const {
    mpz_class acc = 0;
    for (unsigned d : int_digits) acc = acc * base + d;
    mpz_class frac = 0;
    for (unsigned d : frac_digits) frac = frac * base + d;
    mpz_class scale = base_pow(base, static_cast<unsigned>(frac_digits.size()));
    return Rational(acc) + Rational(frac, scale);
}

Rational DigitString::ulp() const {
    return Rational(mpz_class(1), base_pow(base, static_cast<unsigned>(frac_digits.size())));
}

std::string DigitString::str() const {
    std::ostringstream os;
    if (base == 10) {
        if (int_digits.empty()) {
            os << "0";
        } else {
            for (unsigned d : int_digits) os << d;
        }
        if (!frac_digits.empty()) {
            os << ".";
            for (unsigned d : frac_digits) os << d;
        }
    } else {
        mpz_class ip = 0;
        for (unsigned d : int_digits) ip = ip * base + d;
        os << ip << ";";
        for (std::size_t i = 0; i < frac_digits.size(); ++i) {
            if (i) os << ",";
            os << frac_digits[i];
        }
    }
    return os.str();
}

QEPoly taylor_shift(const QEPoly& p, const QuadExt& pivot) {
    return poly_taylor_shift(p, pivot);
}

unsigned guard_digits(unsigned base) {
    // Smallest g with base^g >= 2^8.
    unsigned g = 0;
    mpz_class acc = 1;
    while (acc < 256) {
        acc *= base;
        ++g;
    }
    return g;
}

DigitString extract_monotone(const QEPoly& poly, const QuadExt& target,
                             const Interval& bracket, unsigned base,
                             unsigned frac_digits) {
    if (base < 2) throw UsageError("digit base must be at least 2");
    if (bracket.lo.sign() < 0) throw UsageError("extraction bracket must be nonnegative");

    QEPoly shifted = poly;
    if (shifted.empty()) shifted.push_back(QuadExt(0));
    shifted[0] -= target;

    if (eval_sign(shifted, bracket.lo) > 0 || eval_sign(shifted, bracket.hi) < 0) {
        throw NoRootError("target outside the polynomial's range on the bracket");
    }

    // Leading digit position from the integer part of the bracket top.
    mpz_class top = bracket.hi.floor();
    int lead = 0;
    for (mpz_class t = top; t > 0; t /= base) ++lead;

    DigitString out;
    out.base = base;
    Rational est(0);
    Rational unit = lead > 0 ? Rational(base_pow(base, static_cast<unsigned>(lead - 1)))
                             : Rational(mpz_class(1), mpz_class(base));

    for (int pos = lead - 1; pos >= -static_cast<int>(frac_digits); --pos) {
        // Greatest digit keeping the estimate at or below the root. The cap
        // keeps candidates inside the monotone segment [0, bracket.hi].
        mpz_class cap_z = ((bracket.hi - est) / unit).floor();
        unsigned cap = cap_z >= base ? base - 1
                     : sgn(cap_z) < 0 ? 0
                                      : static_cast<unsigned>(cap_z.get_ui());
        unsigned lo = 0, hi = cap;
        while (lo < hi) {
            unsigned mid = lo + (hi - lo + 1) / 2;
            if (eval_sign(shifted, unit * Rational(static_cast<long>(mid))) <= 0) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        if (lo > 0) {
            QuadExt step(unit * Rational(static_cast<long>(lo)));
            shifted = poly_taylor_shift(shifted, step);
            est += unit * Rational(static_cast<long>(lo));
        }
        if (pos >= 0) {
            out.int_digits.push_back(lo);
        } else {
            out.frac_digits.push_back(lo);
        }
        unit = unit / Rational(static_cast<long>(base));
    }

    while (!out.int_digits.empty() && out.int_digits.front() == 0) {
        out.int_digits.erase(out.int_digits.begin());
    }

    out.exact = shifted[0].is_zero(); // poly(est) == target after recentering
    if (out.exact) {
        out.enclosure = Interval(est);
        return out;
    }
    Rational up = est + out.ulp();
    if (up <= bracket.hi) {
        if (compare(poly_eval(poly, QuadExt(up)), target) <= 0) {
            throw InternalError("digit certification failed: no sign change at v + ulp");
        }
    }
    // Otherwise root <= bracket.hi < v + ulp closes the certificate.
    out.enclosure = Interval(est, up);
    return out;
}

DigitString extract_c21_small(const QuadExt& a, const QuadExt& c, Lemma2Class cls,
                              unsigned base, unsigned frac_digits) {
    if (a.sign() <= 0 || c.sign() <= 0) {
        throw UsageError("C21-type instance needs positive coefficients");
    }
    const QuadExt third = a * QuadExt(Rational(1, 3));

    switch (cls) {
        case Lemma2Class::Equal: {
            auto refine = [&](const Rational& w) { return third.to_interval(w); };
            auto equals = [&](const Rational& r) { return compare(third, QuadExt(r)) == 0; };
            return digitize(refine, equals, base, frac_digits);
        }
        case Lemma2Class::Below: {
            // Rational bracket top >= a/3 with margin below the monotone limit
            // 2a/3: refine the enclosure of a/3 until hi <= 3/2 * lo <= a/2.
            Rational top;
            Rational w(1, 4);
            for (;;) {
                Interval e = third.to_interval(w);
                if (e.lo.sign() > 0 && e.width() * 2 <= e.lo) {
                    top = e.hi;
                    break;
                }
                w = w / 16;
            }
            QEPoly g{QuadExt(0), QuadExt(0), a, QuadExt(-1)}; // a x^2 - x^3
            return extract_monotone(g, c, Interval(Rational(0), top), base, frac_digits);
        }
        case Lemma2Class::Above: {
            // y = 2a/3 - x maps the small root into (0, a/3); the transformed
            // instance (a, c0 - c) classifies Below by construction.
            QuadExt c0 = a.pow(3) * QuadExt(Rational(4, 27));
            QuadExt cc = c0 - c;
            if (cc.sign() <= 0) throw UsageError("Above class requires c < c0");
            if (lemma2_classify(a, cc) != Lemma2Class::Below) {
                throw InternalError("transformed instance did not classify Below");
            }
            const QuadExt x0 = a * QuadExt(Rational(2, 3));
            auto refine = [&](const Rational& w) {
                Rational half = w / 2;
                unsigned ny = 0;
                Rational u(1);
                while (u > half) {
                    u = u / Rational(static_cast<long>(base));
                    ++ny;
                }
                DigitString dy = extract_c21_small(a, cc, Lemma2Class::Below, base, ny);
                Interval x0e = x0.is_rational() ? Interval(x0.rational_value())
                                                : x0.to_interval(half);
                return iv_sub(x0e, dy.enclosure);
            };
            auto equals = [&](const Rational& r) {
                QuadExt rr(r);
                return compare(a * rr * rr - rr.pow(3), c) == 0 &&
                       compare(rr, x0) < 0;
            };
            return digitize(refine, equals, base, frac_digits);
        }
    }
    throw InternalError("unreachable Lemma-2 class");
}

DigitString digitize(const std::function<Interval(const Rational&)>& refine,
                     const std::function<bool(const Rational&)>& equals,
                     unsigned base, unsigned frac_digits) {
    mpz_class scale = base_pow(base, frac_digits);
    Rational ulp(mpz_class(1), scale);
    Rational w = ulp / Rational(base_pow(base, guard_digits(base)));

    auto emit = [&](const mpz_class& k, bool exact, const Interval& enc) {
        DigitString out;
        out.base = base;
        split_digits(k, base, frac_digits, out.int_digits, out.frac_digits);
        out.exact = exact;
        out.enclosure = enc;
        return out;
    };

    for (int iter = 0; iter < 2048; ++iter) {
        Interval e = refine(w);
        if (e.hi.sign() < 0) throw InternalError("digitize: negative enclosure");
        if (e.lo.sign() < 0) e.lo = Rational(0);

        if (e.is_point()) {
            mpz_class k = (e.lo * Rational(scale)).floor();
            bool exact = Rational(k, scale) == e.lo;
            return emit(k, exact, Interval(e.lo));
        }
        mpz_class kl = (e.lo * Rational(scale)).floor();
        mpz_class kh = (e.hi * Rational(scale)).floor();
        if (kl == kh) {
            Rational v(kl, scale);
            if (equals(v)) return emit(kl, true, Interval(v));
            return emit(kl, false, e);
        }
        if (kh - kl == 1) {
            // The enclosure straddles one grid point; it may be the root.
            Rational gp(kh, scale);
            if (equals(gp)) return emit(kh, true, Interval(gp));
        }
        w = w / Rational(static_cast<long>(base * base));
    }
    throw InternalError("digitize did not converge");
}

} // namespace tusi
