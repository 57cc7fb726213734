#include "tusi/analysis.hpp"

#include <random>

#include "tusi/error.hpp"

namespace tusi {

std::string_view case_name(CaseKind k) {
    switch (k) {
        case CaseKind::Impossible: return "impossible";
        case CaseKind::DoubleRoot: return "double_root";
        case CaseKind::TwoRoots: return "two_roots";
        case CaseKind::UniqueRoot: return "unique_root";
    }
    return "?";
}

std::string_view lemma2_name(Lemma2Class c) {
    switch (c) {
        case Lemma2Class::Equal: return "equal";
        case Lemma2Class::Above: return "above";
        case Lemma2Class::Below: return "below";
    }
    return "?";
}

MaximumReport critical_point(const TargetFunction& tf) {
    if (tf.form == Form::C24) {
        // alpha = a, beta = -b; f(x) = x(ax - b - x^2) needs a^2 > 4b to be
        // positive anywhere on x > 0.
        Rational a = tf.alpha, b = -tf.beta;
        if (a * a <= b * 4) {
            throw PositivityImpossible("a^2 <= 4b: the target is nonpositive on x > 0");
        }
    }
    MaximumReport mr;
    mr.d = tf.alpha * tf.alpha + tf.beta * 3;
    if (mr.d.sign() <= 0) throw InternalError("nonpositive discriminant for x0");
    mr.x0 = QuadExt(tf.alpha / 3, Rational(1, 3), mr.d);
    mr.c0 = target_eval(tf, mr.x0);

    // Positivity boundary: positive root of x^2 = alpha x + beta, in its own
    // radicand e = alpha^2 + 4 beta; for C22 this is sqrt(b) directly.
    if (tf.form == Form::C22) {
        mr.domain_hi = QuadExt::sqrt_of(tf.beta);
    } else {
        Rational e = tf.alpha * tf.alpha + tf.beta * 4;
        if (e.sign() < 0) {
            throw InternalError("empty positivity domain past the precondition");
        }
        mr.domain_hi = QuadExt(tf.alpha / 2, Rational(1, 2), e);
    }

    if (mr.x0.sign() <= 0) throw InternalError("critical point not positive");
    if (mr.c0.sign() <= 0) throw InternalError("maximum not positive");
    // f'(x0) = 0 must hold exactly; this is the pivot of everything downstream.
    QuadExt fprime = (mr.x0 * QuadExt(-3) + QuadExt(tf.alpha * 2)) * mr.x0 + QuadExt(tf.beta);
    if (!fprime.is_zero()) throw InternalError("f'(x0) != 0");
    return mr;
}

namespace {

// Rational points l < x0 < h with both still inside the region where f > c;
// refined until f(l) > c and f(h) > c (possible since f(x0) = c0 > c).
struct Straddle {
    Rational lo, hi;
};

Straddle straddle_above(const TargetFunction& tf, const QuadExt& x0, const Rational& c) {
    Rational w(1, 2);
    for (;;) {
        Rational l, h;
        if (x0.is_rational()) {
            l = x0.rational_value() - w;
            h = x0.rational_value() + w;
        } else {
            Interval e = x0.to_interval(w);
            l = e.lo;
            h = e.hi;
        }
        if (l.sign() > 0 && target_eval(tf, l) > c && target_eval(tf, h) > c) {
            return {l, h};
        }
        w = w / 4;
    }
}

} // namespace

CaseOutcome decide_case(const TargetFunction& tf, const MaximumReport& mr) {
    CaseOutcome out;
    int s = compare(mr.c0, QuadExt(tf.c));
    if (s < 0) {
        out.kind = CaseKind::Impossible;
        return out;
    }
    if (s == 0) {
        out.kind = CaseKind::DoubleRoot;
        out.double_root = mr.x0;
        return out;
    }
    out.kind = CaseKind::TwoRoots;
    Straddle mid = straddle_above(tf, mr.x0, tf.c);

    // Small side: walk down until f < c (or an exact hit).
    Rational u = mid.lo / 2;
    for (;;) {
        Rational fu = target_eval(tf, u);
        if (fu == tf.c) {
            out.bracket_small = Interval(u);
            break;
        }
        if (fu < tf.c) {
            out.bracket_small = Interval(u, mid.lo);
            break;
        }
        u = u / 2;
    }

    // Large side: approach domain_hi from below until f < c (or an exact hit).
    Rational w(1, 2);
    for (;;) {
        Rational t;
        if (mr.domain_hi.is_rational()) {
            t = mr.domain_hi.rational_value() - w;
        } else {
            t = mr.domain_hi.to_interval(w).lo;
        }
        if (t > mid.hi) {
            Rational ft = target_eval(tf, t);
            if (ft == tf.c) {
                out.bracket_large = Interval(t);
                break;
            }
            if (ft < tf.c) {
                out.bracket_large = Interval(mid.hi, t);
                break;
            }
        }
        w = w / 4;
    }
    return out;
}

Lemma2Class lemma2_classify(const QuadExt& a, const QuadExt& c) {
    QuadExt half_max = a.pow(3) * QuadExt(Rational(2, 27));
    int s = compare(c, half_max);
    if (s == 0) return Lemma2Class::Equal;
    return s > 0 ? Lemma2Class::Above : Lemma2Class::Below;
}

Lemma2Class lemma2_classify(const CanonicalEquation& eq) {
    if (eq.form != Form::C21) {
        throw UsageError("lemma2_classify applies to C21 instances only");
    }
    return lemma2_classify(QuadExt(eq.a), QuadExt(eq.c));
}

MaximumCheck verify_maximum(const TargetFunction& tf, const MaximumReport& mr,
                            int samples, std::uint64_t seed) {
    if (samples < 1) throw UsageError("verify_maximum needs samples >= 1");
    MaximumCheck rep;
    rep.samples_per_side = samples;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pick(1, 1 << 20);
    auto unit = [&]() { // random rational strictly inside (0, 1)
        return Rational(pick(rng), (1 << 20) + 1);
    };

    // Sampling sups/infs: rational L <= x0 and H >= x0 (strict when x0 is
    // irrational), and D < domain_hi with D > H.
    Rational L, H, D;
    if (mr.x0.is_rational()) {
        L = H = mr.x0.rational_value();
    } else {
        Rational w(1, 16);
        for (;;) {
            Interval e = mr.x0.to_interval(w);
            if (e.lo.sign() > 0) {
                L = e.lo;
                H = e.hi;
                break;
            }
            w = w / 16;
        }
    }
    {
        Rational w(1, 16);
        for (;;) {
            Rational t = mr.domain_hi.is_rational()
                             ? mr.domain_hi.rational_value() - w
                             : mr.domain_hi.to_interval(w).lo;
            if (t > H) {
                D = t;
                break;
            }
            w = w / 16;
        }
    }

    auto check = [&](const Rational& point) {
        if (compare(mr.c0, QuadExt(target_eval(tf, point))) <= 0) {
            rep.pass = false;
            if (!rep.witness) rep.witness = point;
        }
    };
    for (int i = 0; i < samples; ++i) {
        check(L * unit());            // in (0, x0)
        check(H + (D - H) * unit());  // in (x0, domain_hi)
    }
    return rep;
}

} // namespace tusi
