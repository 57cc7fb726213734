#pragma once

#include "tusi/rational.hpp"

namespace tusi {

/// Closed rational interval [lo, hi]; an enclosure of some target real.
struct Interval {
    Rational lo, hi;

    Interval() = default;
    Interval(Rational lo, Rational hi);
    explicit Interval(const Rational& point) : lo(point), hi(point) {}

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const Interval& o) const { return lo <= o.hi && o.lo <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Enclosure [lo, hi] of sqrt(r) with lo^2 <= r <= hi^2 and hi - lo <= width,
/// by bisection from an integer-square-root seed. Exact for perfect squares.
Interval sqrt_enclosure(const Rational& r, const Rational& width);

// Outward interval arithmetic (exact rational endpoints, so "outward" is
// simply min/max selection; nothing is rounded).
Interval iv_add(const Interval& a, const Interval& b);
Interval iv_sub(const Interval& a, const Interval& b);
Interval iv_mul(const Interval& a, const Interval& b);
Interval iv_neg(const Interval& a);
Interval iv_scale(const Interval& a, const Rational& k);
Interval iv_offset(const Interval& a, const Rational& k);
// Enclosure of sqrt over a (requires a.hi >= 0; negative lows clamp to 0).
Interval iv_sqrt(const Interval& a, const Rational& width);

} // namespace tusi
