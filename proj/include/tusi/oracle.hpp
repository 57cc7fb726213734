#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tusi/analysis.hpp"
#include "tusi/forms.hpp"
#include "tusi/interval.hpp"

namespace tusi {

/// One real root of a rational polynomial: an interval containing exactly one
/// distinct root (a point for exactly known roots), with its multiplicity.
struct IsolatedRoot {
    Interval interval;
    int multiplicity = 1;
};

/// All roots in (0, +inf), isolated by Sturm sign-variation counts over the
/// square-free part; multiplicities recovered from the exact gcd with the
/// derivative. Intervals are disjoint with rational endpoints, sorted.
std::vector<IsolatedRoot> isolate_positive_roots(const GeneralPoly& p);

/// Bisection with exact sign tests until the interval is at most `width`
/// wide. Multiple roots are exact rational points already at isolation.
IsolatedRoot refine_root(const IsolatedRoot& r, const GeneralPoly& p,
                         const Rational& width);

/// What the historical pipeline claims about one equation, in a form the
/// oracle can audit without depending on how it was produced.
struct PipelineSummary {
    CaseKind kind = CaseKind::Impossible;
    std::optional<QuadExt> x0;        // for localization and double roots
    std::vector<Interval> roots;      // enclosures; points when exact
    std::vector<int> multiplicities;  // parallel to roots
};

struct DiffReport {
    bool ok = true;
    std::string detail;   // first discrepancy, empty when ok
    int oracle_roots = 0; // distinct positive roots found
};

/// Cross-checks case variant against the oracle's root count/multiplicities,
/// matches every pipeline enclosure to exactly one oracle interval refined to
/// `width`, and audits the localization x1 < x0 < x2 in the TwoRoots case.
DiffReport differential_check(const GeneralPoly& p, const PipelineSummary& s,
                              const Rational& width);

} // namespace tusi
