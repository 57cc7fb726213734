#include "tusi/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "tusi/error.hpp"
#include "tusi/polynomial.hpp"

namespace tusi {

namespace {

// Square-free part with roots at the origin stripped, plus the multiple-root
// bookkeeping (cubics have at most one multiple root and it is rational).
struct Prepared {
    RatPoly squarefree;                  // monic, squarefree, p(0) != 0
    std::optional<Rational> multi_root;  // the multiple root, if any
    int multi_mult = 1;
};

int linear_multiplicity(RatPoly p, const Rational& r) {
    int m = 0;
    RatPoly lin{-r, Rational(1)};
    while (poly_degree(p) >= 1 && poly_eval(p, r).is_zero()) {
        p = poly_div_exact(p, lin);
        ++m;
    }
    return m;
}

Prepared prepare(const GeneralPoly& g) {
    RatPoly p = g.coeffs();
    poly_trim(p);
    // Roots at the origin are outside (0, inf); strip them.
    while (!p.empty() && p.front().is_zero()) p.erase(p.begin());
    Prepared out;
    if (poly_degree(p) < 1) return out;
    p = poly_monic(std::move(p));

    RatPoly gcd = poly_gcd(p, poly_derivative(p));
    if (poly_degree(gcd) == 0) {
        out.squarefree = p;
        return out;
    }
    Rational r;
    if (poly_degree(gcd) == 1) {
        r = -gcd[0]; // monic x + g0
    } else if (poly_degree(gcd) == 2) {
        r = -gcd[1] / 2; // monic (x - r)^2
    } else {
        throw InternalError("gcd degree above 2 for a cubic");
    }
    out.multi_root = r;
    out.multi_mult = linear_multiplicity(p, r);
    out.squarefree = poly_monic(poly_div_exact(p, gcd));
    return out;
}

IsolatedRoot bisect_to(const IsolatedRoot& r, const RatPoly& sf, const Rational& width) {
    if (r.interval.is_point() || r.interval.width() <= width) return r;
    Rational lo = r.interval.lo, hi = r.interval.hi;
    int shi = poly_eval(sf, hi).sign();
    if (shi == 0) return {Interval(hi), r.multiplicity};
    int slo = poly_eval(sf, lo).sign();
    if (slo == 0) return {Interval(lo), r.multiplicity};
    if (slo == shi) throw InternalError("bisection endpoints do not straddle the root");
    while (hi - lo > width) {
        Rational m = (lo + hi) / 2;
        int sm = poly_eval(sf, m).sign();
        if (sm == 0) return {Interval(m), r.multiplicity};
        if (sm == slo) {
            lo = m;
        } else {
            hi = m;
        }
    }
    return {Interval(lo, hi), r.multiplicity};
}

struct Sturm {
    std::vector<RatPoly> chain;

    explicit Sturm(const RatPoly& sf) {
        chain.push_back(sf);
        RatPoly d = poly_derivative(sf);
        poly_trim(d);
        while (!d.empty()) {
            chain.push_back(d);
            RatPoly r = poly_rem(chain[chain.size() - 2], chain.back());
            d = poly_neg(r);
            poly_trim(d);
        }
    }

    int variations(const Rational& x) const {
        int var = 0, prev = 0;
        for (const auto& q : chain) {
            int s = poly_eval(q, x).sign();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // Distinct roots in (a, b].
    int count(const Rational& a, const Rational& b) const {
        return variations(a) - variations(b);
    }
};

} // namespace

std::vector<IsolatedRoot> isolate_positive_roots(const GeneralPoly& g) {
    Prepared pre = prepare(g);
    std::vector<IsolatedRoot> out;
    const RatPoly& sf = pre.squarefree;
    if (poly_degree(sf) < 1) return out;

    Rational bound(1);
    for (int i = 0; i < poly_degree(sf); ++i) {
        Rational c = sf[static_cast<std::size_t>(i)].abs();
        if (c > bound - 1) bound = c + 1;
    }

    Sturm sturm(sf);
    struct Piece {
        Rational lo, hi;
        int count;
    };
    std::vector<Piece> stack;
    int total = sturm.count(Rational(0), bound);
    if (total > 0) stack.push_back({Rational(0), bound, total});

    // Invariant: piece endpoints are never roots of sf (0 and the Cauchy
    // bound are not, and split points are nudged off roots), so a count-1
    // piece holds its root strictly inside.
    while (!stack.empty()) {
        Piece p = stack.back();
        stack.pop_back();
        if (p.count == 1) {
            out.push_back({Interval(p.lo, p.hi), 1});
            continue;
        }
        Rational m = (p.lo + p.hi) / 2;
        Rational step = (p.hi - p.lo) / 4;
        while (poly_eval(sf, m).is_zero()) {
            m += step;
            step = step / 2;
        }
        int left = sturm.count(p.lo, m);
        if (left > 0) stack.push_back({p.lo, m, left});
        if (p.count - left > 0) stack.push_back({m, p.hi, p.count - left});
    }

    std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.interval.lo < b.interval.lo;
    });

    // Tighten until the enclosures are pairwise disjoint (they may share a
    // split point immediately after isolation).
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i + 1].interval.lo <= out[i].interval.hi) {
            out[i] = bisect_to(out[i], sf, out[i].interval.width() / 4);
            out[i + 1] = bisect_to(out[i + 1], sf, out[i + 1].interval.width() / 4);
        }
    }

    // Attach the multiplicity of the (rational) multiple root, if positive.
    if (pre.multi_root && pre.multi_root->sign() > 0 &&
        poly_eval(sf, *pre.multi_root).is_zero()) {
        for (auto& r : out) {
            if (r.interval.contains(*pre.multi_root)) {
                r.interval = Interval(*pre.multi_root);
                r.multiplicity = pre.multi_mult;
            }
        }
    }
    return out;
}

IsolatedRoot refine_root(const IsolatedRoot& r, const GeneralPoly& g,
                         const Rational& width) {
    if (width.sign() <= 0) throw UsageError("refine_root needs width > 0");
    if (r.interval.is_point() || r.interval.width() <= width) return r;
    Prepared pre = prepare(g);
    return bisect_to(r, pre.squarefree, width);
}

namespace {

std::string render_interval(const Interval& iv) {
    return "[" + iv.lo.to_string() + ", " + iv.hi.to_string() + "]";
}

} // namespace

DiffReport differential_check(const GeneralPoly& p, const PipelineSummary& s,
                              const Rational& width) {
    DiffReport rep;
    auto fail = [&](const std::string& why) {
        rep.ok = false;
        if (rep.detail.empty()) rep.detail = why;
    };

    std::vector<IsolatedRoot> oracle = isolate_positive_roots(p);
    rep.oracle_roots = static_cast<int>(oracle.size());
    for (auto& r : oracle) r = refine_root(r, p, width);

    // (i) Case variant vs oracle root count and multiplicity.
    switch (s.kind) {
        case CaseKind::Impossible:
            if (!oracle.empty()) fail("pipeline says impossible, oracle found roots");
            return rep;
        case CaseKind::DoubleRoot:
            if (oracle.size() != 1 || oracle[0].multiplicity != 2) {
                fail("pipeline says double root, oracle disagrees");
                return rep;
            }
            break;
        case CaseKind::TwoRoots:
            if (oracle.size() != 2 || oracle[0].multiplicity != 1 ||
                oracle[1].multiplicity != 1) {
                fail("pipeline says two simple roots, oracle disagrees");
                return rep;
            }
            break;
        case CaseKind::UniqueRoot:
            if (oracle.size() != 1 || oracle[0].multiplicity != 1) {
                fail("pipeline says unique root, oracle disagrees");
                return rep;
            }
            break;
    }

    if (s.roots.size() != oracle.size()) {
        fail("pipeline reported " + std::to_string(s.roots.size()) + " roots, oracle " +
             std::to_string(oracle.size()));
        return rep;
    }

    // (ii) Each pipeline enclosure meets exactly one oracle interval, in order.
    for (std::size_t i = 0; i < s.roots.size(); ++i) {
        int hits = 0;
        std::size_t which = 0;
        for (std::size_t j = 0; j < oracle.size(); ++j) {
            if (s.roots[i].intersects(oracle[j].interval)) {
                ++hits;
                which = j;
            }
        }
        if (hits != 1) {
            fail("root enclosure " + render_interval(s.roots[i]) + " meets " +
                 std::to_string(hits) + " oracle intervals");
            return rep;
        }
        if (which != i) {
            fail("root ordering disagrees with the oracle");
            return rep;
        }
        if (!s.multiplicities.empty() &&
            s.multiplicities[i] != oracle[which].multiplicity) {
            fail("multiplicity disagrees with the oracle");
            return rep;
        }
    }

    // (iii) Localization around x0 in the two-root case.
    if (s.kind == CaseKind::TwoRoots && s.x0) {
        Rational w = width;
        for (int iter = 0;; ++iter) {
            Interval e = s.x0->to_interval(w);
            if (oracle[0].interval.hi < e.lo && e.hi < oracle[1].interval.lo) break;
            if (iter > 64) {
                fail("cannot certify x1 < x0 < x2");
                break;
            }
            w = w / 16;
        }
    }
    if (s.kind == CaseKind::DoubleRoot && s.x0) {
        // The double root is x0 itself (rational whenever inputs are).
        if (!oracle[0].interval.is_point() || !s.x0->is_rational() ||
            oracle[0].interval.lo != s.x0->rational_value()) {
            fail("double root does not equal x0");
        }
    }
    return rep;
}

} // namespace tusi
