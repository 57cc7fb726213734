#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tusi/analysis.hpp"
#include "tusi/forms.hpp"
#include "tusi/interval.hpp"
#include "tusi/quadext.hpp"

namespace tusi {

enum class SubstKind { ShiftPlus, ShiftMinus, Offset, Lemma2 };

std::string_view subst_name(SubstKind k);

/// One affine substitution linking a source equation to a target equation,
/// with enough data to recover source-variable roots from target-variable
/// roots (the rendered back_map plus the typed pivot on the solver side).
struct ReductionStep {
    SubstKind kind;
    Form source_form;
    Form target_form;
    std::string pivot;    // exact rendering of the substitution constant
    std::string target;   // rendering of the produced equation
    std::string back_map; // e.g. "x = (2) + X"
};

struct ReductionChain {
    std::vector<ReductionStep> steps;
};

/// Target of an affine shift: C15-type "X^3 + a X^2 = c" from the large-root
/// shift, C21-type "a X^2 - X^3 = c" from the small-root shift. Coefficients
/// are exact in Q(sqrt(d)); a equals sqrt(d) itself.
struct CubicTarget {
    QuadExt a, c;
};

/// A root, either exact in some quadratic field or enclosed.
struct RootValue {
    bool exact = false;
    QuadExt value;      // valid when exact
    Interval enclosure; // always an enclosure of the root
};

/// Q7-type instance X^2 + b X = c; coefficients exact when the inputs were,
/// otherwise interval-valued (the digit-enclosure arithmetic path).
struct QuadTarget {
    bool exact = false;
    QuadExt b, c;         // valid when exact
    Interval b_iv, c_iv;  // valid when not exact
};

/// x = x0 + X turns f(x) = c into X^3 + a'X^2 = c' with a' = 3x0 - alpha
/// (= sqrt(d) exactly, the linear term vanishing because f'(x0) = 0) and
/// c' = c0 - c. Requires the TwoRoots case (c < c0).
std::pair<CubicTarget, ReductionStep>
shift_for_large_root(const TargetFunction& tf, const MaximumReport& mr);

/// x = x0 - X turns f(x) = c into a'X^2 - X^3 = c' with the same a', c'.
/// The small root X1 of the target maps back as x1 = x0 - X1. Not applicable
/// to C21, whose shift reproduces the same type; C21 goes through the
/// quadratic detour instead.
std::pair<CubicTarget, ReductionStep>
shift_for_small_root(const TargetFunction& tf, const MaximumReport& mr);

/// The small-root detour for C21-type instances: given the large root x2 of
/// a x^2 - x^3 = c, the quadratic X^2 + (a - x2) X = x2 (a - x2) has a unique
/// positive root X, and x1 = (a - x2) + X. Coefficients are exact when x2 is,
/// interval-valued otherwise.
std::pair<QuadTarget, ReductionStep>
small_root_via_quadratic(const QuadExt& a, const RootValue& x2);

/// y^2 - by = c solves through x^2 + bx = c via x = y - b; the root maps back
/// as y = x + b.
std::pair<QuadTarget, ReductionStep> reduce_q8_to_q7(const CanonicalEquation& q8);

/// For a C21-type instance in the Above class (c > c0/2): y = 2a/3 - x maps
/// the small root into (0, a/3), where y solves a y^2 - y^3 = c0 - c, an
/// instance of the same type in the Below class.
std::pair<CubicTarget, ReductionStep>
lemma2_transform(const QuadExt& a, const QuadExt& c);

/// Unique positive root (-b + sqrt(b^2 + 4c))/2 of X^2 + bX = c. Exact
/// whenever representable (always for rational coefficients; for QuadExt
/// coefficients when the discriminant has a square root in the field),
/// otherwise an enclosure aiming at `width` (limited by the width of
/// interval-valued coefficients; callers refine inputs and retry).
RootValue solve_q7(const QuadTarget& q, const Rational& width);

} // namespace tusi
