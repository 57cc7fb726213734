#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tusi/forms.hpp"
#include "tusi/interval.hpp"
#include "tusi/quadext.hpp"

namespace tusi {

/// Exact critical-point data for f(x) = -x^3 + alpha x^2 + beta x on x > 0.
///
/// x0 = (alpha + sqrt(d))/3 with d = alpha^2 + 3 beta is the unique positive
/// critical point with f''(x0) < 0; c0 = f(x0) is the maximum of f over the
/// positivity domain (0, domain_hi), where domain_hi is the positive root of
/// x^2 = alpha x + beta. domain_hi lives in its own radicand and is never
/// mixed arithmetically with d-values.
struct MaximumReport {
    Rational d;
    QuadExt x0;
    QuadExt c0;
    QuadExt domain_hi;
};

/// Computes x0, c0 and the positivity domain, all exactly.
/// Throws PositivityImpossible for C24 with a^2 <= 4b (f <= 0 on all of x > 0).
MaximumReport critical_point(const TargetFunction& tf);

enum class CaseKind { Impossible, DoubleRoot, TwoRoots, UniqueRoot };

std::string_view case_name(CaseKind k);

struct CaseOutcome {
    CaseKind kind = CaseKind::Impossible;
    QuadExt double_root;             // DoubleRoot
    Interval bracket_small;          // TwoRoots: contains x1, inside (0, x0)
    Interval bracket_large;          // TwoRoots: contains x2, inside (x0, domain_hi)
    Interval bracket;                // UniqueRoot (filled by the solver)
};

/// The existence trichotomy, decided by the exact sign of c0 - c. In the
/// TwoRoots case the brackets straddle c: f < c at the outer endpoint and
/// f > c at the endpoint taken from a refined enclosure of x0.
CaseOutcome decide_case(const TargetFunction& tf, const MaximumReport& mr);

/// Position of the small root of a C21-type instance a x^2 - x^3 = c relative
/// to a/3, decided by the exact sign of c - c0/2 (c0 = 4a^3/27):
/// Equal -> x1 = a/3, Above -> x1 > a/3, Below -> x1 < a/3.
enum class Lemma2Class { Equal, Above, Below };

std::string_view lemma2_name(Lemma2Class c);

Lemma2Class lemma2_classify(const QuadExt& a, const QuadExt& c);
/// Form-checked variant; usage error unless eq.form == C21.
Lemma2Class lemma2_classify(const CanonicalEquation& eq);

struct MaximumCheck {
    int samples_per_side = 0;
    bool pass = true;
    std::optional<Rational> witness; // a sampled point with f(point) >= c0
};

/// Samples rational points on both sides of x0 and verifies f < c0 at every
/// one by exact sign tests. A failure signals an implementation bug.
MaximumCheck verify_maximum(const TargetFunction& tf, const MaximumReport& mr,
                            int samples, std::uint64_t seed);

} // namespace tusi
