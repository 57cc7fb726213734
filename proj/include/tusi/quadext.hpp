#pragma once

#include <optional>
#include <string>

#include "tusi/interval.hpp"
#include "tusi/rational.hpp"

namespace tusi {

/// Element p + q*sqrt(d) of the real quadratic field Q(sqrt(d)), d >= 0.
///
/// Normal form: if d is the square of a rational r, the value collapses to the
/// rational subfield as (p + q*r, 0, d). Consequently q != 0 implies d is
/// positive and not a rational square, and every rational value has q == 0.
///
/// Values from different radicands never mix arithmetically: an operation on
/// x and y requires x.d == y.d unless one operand is rational (rationals
/// belong to every field and lift silently).
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(const Rational& r) : p_(r) {} // NOLINT: implicit by design
    QuadExt(long n) : p_(n) {}            // NOLINT
    QuadExt(Rational p, Rational q, Rational d);

    static QuadExt sqrt_of(const Rational& d) { return QuadExt(0, 1, d); }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    const Rational& radicand() const { return d_; }

    bool is_rational() const { return q_.is_zero(); }
    // Requires is_rational().
    const Rational& rational_value() const;

    /// Exact sign of p + q*sqrt(d), by rational case analysis; never
    /// approximates.
    int sign() const;
    bool is_zero() const { return p_.is_zero() && q_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-p_, -q_, d_, NoNormalize{}); }
    friend QuadExt operator+(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator-(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator*(const QuadExt& a, const QuadExt& b);
    friend QuadExt operator/(const QuadExt& a, const QuadExt& b);

    QuadExt& operator+=(const QuadExt& o) { *this = *this + o; return *this; }
    QuadExt& operator-=(const QuadExt& o) { *this = *this - o; return *this; }
    QuadExt& operator*=(const QuadExt& o) { *this = *this * o; return *this; }

    friend bool operator==(const QuadExt& a, const QuadExt& b) {
        return (a - b).is_zero();
    }

    QuadExt conjugate() const { return QuadExt(p_, -q_, d_, NoNormalize{}); }
    QuadExt inverse() const;
    QuadExt pow(unsigned e) const;

    /// Rational enclosure of width <= `width` (exact point when rational).
    Interval to_interval(const Rational& width) const;

    /// Exact square root within the same field, when one exists there.
    std::optional<QuadExt> exact_sqrt() const;

    std::string to_string() const;                  // e.g. "2 - 1*sqrt(3)"
    std::string to_decimal(std::size_t digits) const;

private:
    struct NoNormalize {};
    QuadExt(Rational p, Rational q, Rational d, NoNormalize)
        : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {}

    static Rational common_radicand(const QuadExt& a, const QuadExt& b);

    Rational p_, q_, d_;
};

inline int sign(const QuadExt& x) { return x.sign(); }

/// Sign of a - b for same-field (or rational) operands.
int compare(const QuadExt& a, const QuadExt& b);

/// Sign of a - b for arbitrary radicands: exact equality test first, then
/// enclosure refinement until the intervals separate.
int compare_via_intervals(const QuadExt& a, const QuadExt& b);

} // namespace tusi
