#pragma once

#include <functional>
#include <string>
#include <vector>

#include "tusi/analysis.hpp"
#include "tusi/interval.hpp"
#include "tusi/polynomial.hpp"

namespace tusi {

/// Positional digits of a nonnegative real root, base 10 or 60 first-class.
///
/// Truncation semantics: the digit value v satisfies v <= root < v + ulp with
/// ulp = base^-(fraction digits); the enclosure is at most one ulp wide and
/// always contains the root. `exact` marks roots that equal v exactly.
struct DigitString {
    unsigned base = 10;
    std::vector<unsigned> int_digits;  // most significant first; empty means 0
    std::vector<unsigned> frac_digits; // exactly the requested count
    bool exact = false;
    Interval enclosure;

    Rational value() const;
    Rational ulp() const;
    /// Base 10 renders as a plain decimal; base 60 as "I;f1,f2,..." with the
    /// integer part in decimal and fraction digits separated by commas.
    std::string str() const;
};

/// p(pivot + X) by repeated synthetic division, exact in the field.
QEPoly taylor_shift(const QEPoly& p, const QuadExt& pivot);

/// Digit-by-digit extraction of the unique solution of poly(x) = target in
/// `bracket`, for poly strictly increasing on [0, bracket.hi]. Each digit is
/// the greatest candidate keeping the running value below the root (exact
/// sign tests, Horner-style recentering); the result is certified by a sign
/// change across [v, v + ulp] (or by root <= bracket.hi when v + ulp exceeds
/// the bracket).
DigitString extract_monotone(const QEPoly& poly, const QuadExt& target,
                             const Interval& bracket, unsigned base,
                             unsigned frac_digits);

/// Small root of the C21-type instance a x^2 - x^3 = c, dispatched on the
/// Lemma-2 class: Equal returns a/3 exactly, Below extracts directly on a
/// bracket below a/3 (where a - 3x > 0 throughout), Above transforms through
/// y = 2a/3 - x and maps the digits back.
DigitString extract_c21_small(const QuadExt& a, const QuadExt& c, Lemma2Class cls,
                              unsigned base, unsigned frac_digits);

/// Digits of a real value known only through refinement: `refine(w)` returns
/// an enclosure of width <= w, `equals(r)` decides value == r exactly. Used
/// wherever a root is carried through an affine back-map.
DigitString digitize(const std::function<Interval(const Rational&)>& refine,
                     const std::function<bool(const Rational&)>& equals,
                     unsigned base, unsigned frac_digits);

/// Extra internal digits carried by composed extractions before truncation.
unsigned guard_digits(unsigned base);

} // namespace tusi
