#include "tusi/quadext.hpp"

#include <sstream>

namespace tusi {

QuadExt::QuadExt(Rational p, Rational q, Rational d)
    : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
    if (d_.sign() < 0) throw DomainError("quadratic field with negative radicand");
    if (q_.is_zero()) return;
    if (auto r = d_.exact_sqrt()) {
        p_ += q_ * *r;
        q_ = Rational(0);
    }
}

const Rational& QuadExt::rational_value() const {
    if (!is_rational()) throw UsageError("rational_value() of an irrational element");
    return p_;
}

Rational QuadExt::common_radicand(const QuadExt& a, const QuadExt& b) {
    if (a.q_.is_zero()) return b.d_;
    if (b.q_.is_zero()) return a.d_;
    if (a.d_ == b.d_) return a.d_;
    throw UsageError("mixed radicands: sqrt(" + a.d_.to_string() + ") vs sqrt(" +
                     b.d_.to_string() + ")");
}

int QuadExt::sign() const {
    if (q_.is_zero()) return p_.sign();
    // q != 0 implies d positive and irrational, so sqrt(d) > 0.
    int sp = p_.sign(), sq = q_.sign();
    if (sp == 0) return sq;
    if (sp > 0 && sq > 0) return 1;
    if (sp < 0 && sq < 0) return -1;
    // Opposite signs: the larger of |p| and |q|sqrt(d) decides, compared
    // exactly through p^2 vs q^2 d. Equality cannot happen (sqrt(d) is
    // irrational here).
    int c = (p_ * p_ - q_ * q_ * d_).sign();
    if (c == 0) throw InternalError("square radicand escaped normalization");
    return c > 0 ? sp : sq;
}

QuadExt operator+(const QuadExt& a, const QuadExt& b) {
    Rational d = QuadExt::common_radicand(a, b);
    return QuadExt(a.p_ + b.p_, a.q_ + b.q_, d);
}

QuadExt operator-(const QuadExt& a, const QuadExt& b) {
    Rational d = QuadExt::common_radicand(a, b);
    return QuadExt(a.p_ - b.p_, a.q_ - b.q_, d);
}

QuadExt operator*(const QuadExt& a, const QuadExt& b) {
    Rational d = QuadExt::common_radicand(a, b);
    return QuadExt(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d);
}

QuadExt QuadExt::inverse() const {
    Rational norm = p_ * p_ - q_ * q_ * d_;
    if (norm.is_zero()) {
        if (is_zero()) throw DomainError("inverse of zero");
        throw InternalError("zero norm for a nonzero element");
    }
    return QuadExt(p_ / norm, -q_ / norm, d_);
}

QuadExt operator/(const QuadExt& a, const QuadExt& b) {
    Rational d = QuadExt::common_radicand(a, b);
    QuadExt bl(b.p_, b.q_, d);
    return QuadExt(a.p_, a.q_, d) * bl.inverse();
}

QuadExt QuadExt::pow(unsigned e) const {
    QuadExt acc(Rational(1), Rational(0), d_);
    QuadExt base = *this;
    while (e > 0) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

Interval QuadExt::to_interval(const Rational& width) const {
    if (width.sign() <= 0) throw UsageError("to_interval needs width > 0");
    if (is_rational()) return Interval(p_);
    Interval s = sqrt_enclosure(d_, width / q_.abs());
    if (q_.sign() > 0) return Interval(p_ + q_ * s.lo, p_ + q_ * s.hi);
    return Interval(p_ + q_ * s.hi, p_ + q_ * s.lo);
}

std::optional<QuadExt> QuadExt::exact_sqrt() const {
    int s = sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return QuadExt(Rational(0), Rational(0), d_);
    if (is_rational()) {
        if (auto r = p_.exact_sqrt()) return QuadExt(*r, Rational(0), d_);
        if (d_.sign() > 0) {
            // p = k^2 d gives sqrt(p) = k sqrt(d) within the field.
            if (auto k = (p_ / d_).exact_sqrt()) return QuadExt(Rational(0), *k, d_);
        }
        return std::nullopt;
    }
    // Want (u + v sqrt(d))^2 = p + q sqrt(d): u^2 + v^2 d = p, 2uv = q.
    // u^2 and v^2 d are the roots of t^2 - p t + q^2 d / 4.
    Rational disc = p_ * p_ - q_ * q_ * d_;
    auto w = disc.exact_sqrt();
    if (!w) return std::nullopt;
    for (const Rational& t : {(p_ + *w) / 2, (p_ - *w) / 2}) {
        auto u = t.exact_sqrt();
        if (!u || u->is_zero()) continue;
        Rational v = q_ / (*u * 2);
        QuadExt cand(*u, v, d_);
        if (cand * cand == *this) {
            return cand.sign() > 0 ? cand : -cand;
        }
    }
    return std::nullopt;
}

std::string QuadExt::to_string() const {
    if (is_rational()) return p_.to_string();
    std::ostringstream os;
    std::string radical = "sqrt(" + d_.to_string() + ")";
    if (!p_.is_zero()) {
        os << p_.to_string() << (q_.sign() > 0 ? " + " : " - ")
           << q_.abs().to_string() << "*" << radical;
    } else {
        if (q_ == Rational(1)) {
            os << radical;
        } else if (q_ == Rational(-1)) {
            os << "-" << radical;
        } else {
            os << q_.to_string() << "*" << radical;
        }
    }
    return os.str();
}

std::string QuadExt::to_decimal(std::size_t digits) const {
    if (is_rational()) return p_.to_decimal(digits);
    // Refine until the truncated decimal is unambiguous. The value is
    // irrational here, so it never sits exactly on the decimal grid.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational w(1, 16);
    for (;;) {
        Interval e = to_interval(w);
        mpz_class fl = (e.lo * Rational(scale)).floor();
        mpz_class fh = (e.hi * Rational(scale)).floor();
        if (fl == fh) return Rational(fl, scale).to_decimal(digits);
        w = w / 256;
    }
}

int compare(const QuadExt& a, const QuadExt& b) { return (a - b).sign(); }

int compare_via_intervals(const QuadExt& a, const QuadExt& b) {
    if (a.is_rational() || b.is_rational() || a.radicand() == b.radicand()) {
        return compare(a, b);
    }
    // Cross-field equality: p parts equal and q^2 d parts equal with same sign.
    if (a.p() == b.p() && a.q().sign() == b.q().sign() &&
        a.q() * a.q() * a.radicand() == b.q() * b.q() * b.radicand()) {
        return 0;
    }
    Rational w(1, 4);
    for (;;) {
        Interval ia = a.to_interval(w);
        Interval ib = b.to_interval(w);
        if (ia.hi < ib.lo) return -1;
        if (ib.hi < ia.lo) return 1;
        w = w / 64;
    }
}

} // namespace tusi
