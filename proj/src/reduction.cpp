#include "tusi/reduction.hpp"

#include "tusi/error.hpp"
#include "tusi/polynomial.hpp"

namespace tusi {

std::string_view subst_name(SubstKind k) {
    switch (k) {
        case SubstKind::ShiftPlus: return "shift_plus";
        case SubstKind::ShiftMinus: return "shift_minus";
        case SubstKind::Offset: return "offset";
        case SubstKind::Lemma2: return "lemma2";
    }
    return "?";
}

namespace {

std::string render_c15(const CubicTarget& t) {
    return "X^3 + (" + t.a.to_string() + ")*X^2 = " + t.c.to_string();
}

std::string render_c21(const CubicTarget& t) {
    return "(" + t.a.to_string() + ")*X^2 - X^3 = " + t.c.to_string();
}

std::string render_q7(const QuadTarget& t) {
    if (t.exact) {
        return "X^2 + (" + t.b.to_string() + ")*X = " + t.c.to_string();
    }
    return "X^2 + [" + t.b_iv.lo.to_decimal(12) + ", " + t.b_iv.hi.to_decimal(12) +
           "]*X = [" + t.c_iv.lo.to_decimal(12) + ", " + t.c_iv.hi.to_decimal(12) + "]";
}

// Shared shift arithmetic: recenter f at x0 and read off a' = 3x0 - alpha.
// The vanishing linear term is the operational form of f'(x0) = 0.
CubicTarget shifted_target(const TargetFunction& tf, const MaximumReport& mr) {
    if (compare(mr.c0, QuadExt(tf.c)) <= 0) {
        throw UsageError("shift reductions require the TwoRoots case (c < c0)");
    }
    QEPoly f{QuadExt(0), QuadExt(tf.beta), QuadExt(tf.alpha), QuadExt(-1)};
    QEPoly sh = poly_taylor_shift(f, mr.x0);
    if (!sh[1].is_zero()) throw InternalError("linear term survived the shift");
    if (compare(sh[0], mr.c0) != 0) throw InternalError("constant term is not c0");
    CubicTarget t;
    t.a = -sh[2];
    if (compare(t.a * t.a, QuadExt(mr.d)) != 0) {
        throw InternalError("a' squared does not equal the radicand");
    }
    t.c = mr.c0 - QuadExt(tf.c);
    return t;
}

} // namespace

std::pair<CubicTarget, ReductionStep>
shift_for_large_root(const TargetFunction& tf, const MaximumReport& mr) {
    CubicTarget t = shifted_target(tf, mr);
    ReductionStep step{SubstKind::ShiftPlus, tf.form, Form::C15, mr.x0.to_string(),
                       render_c15(t), "x = (" + mr.x0.to_string() + ") + X"};
    return {t, step};
}

std::pair<CubicTarget, ReductionStep>
shift_for_small_root(const TargetFunction& tf, const MaximumReport& mr) {
    if (tf.form == Form::C21) {
        throw UsageError("the small-root shift maps C21 to itself; use the quadratic detour");
    }
    CubicTarget t = shifted_target(tf, mr);
    ReductionStep step{SubstKind::ShiftMinus, tf.form, Form::C21, mr.x0.to_string(),
                       render_c21(t), "x = (" + mr.x0.to_string() + ") - X"};
    return {t, step};
}

std::pair<QuadTarget, ReductionStep>
small_root_via_quadratic(const QuadExt& a, const RootValue& x2) {
    QuadTarget t;
    std::string pivot;
    if (x2.exact) {
        t.exact = true;
        t.b = a - x2.value;
        if (t.b.sign() <= 0) throw UsageError("inconsistent input: x2 >= a");
        t.c = x2.value * t.b;
        t.b_iv = Interval(Rational(0));
        t.c_iv = Interval(Rational(0));
        pivot = t.b.to_string();
    } else {
        Rational w = x2.enclosure.width();
        if (w.is_zero()) w = Rational(1, 1 << 20);
        Interval a_iv = a.is_rational() ? Interval(a.rational_value()) : a.to_interval(w);
        t.b_iv = iv_sub(a_iv, x2.enclosure);
        if (t.b_iv.hi.sign() <= 0) throw UsageError("inconsistent input: x2 >= a");
        if (t.b_iv.lo.sign() <= 0) {
            throw UsageError("enclosure of x2 too coarse to separate it from a");
        }
        t.c_iv = iv_mul(x2.enclosure, t.b_iv);
        pivot = "[" + t.b_iv.lo.to_decimal(12) + ", " + t.b_iv.hi.to_decimal(12) + "]";
    }
    ReductionStep step{SubstKind::Offset, Form::C21, Form::Q7, pivot, render_q7(t),
                       "x1 = (a - x2) + X"};
    return {t, step};
}

std::pair<QuadTarget, ReductionStep> reduce_q8_to_q7(const CanonicalEquation& q8) {
    if (q8.form != Form::Q8) throw UsageError("reduce_q8_to_q7 needs a Q8 instance");
    QuadTarget t;
    t.exact = true;
    t.b = QuadExt(q8.b);
    t.c = QuadExt(q8.c);
    t.b_iv = Interval(q8.b);
    t.c_iv = Interval(q8.c);
    ReductionStep step{SubstKind::Offset, Form::Q8, Form::Q7, q8.b.to_string(),
                       render_q7(t), "y = X + (" + q8.b.to_string() + ")"};
    return {t, step};
}

std::pair<CubicTarget, ReductionStep>
lemma2_transform(const QuadExt& a, const QuadExt& c) {
    if (lemma2_classify(a, c) != Lemma2Class::Above) {
        throw UsageError("lemma2_transform applies to the Above class only");
    }
    QuadExt c0 = a.pow(3) * QuadExt(Rational(4, 27));
    CubicTarget t{a, c0 - c};
    if (t.c.sign() <= 0) throw UsageError("lemma2_transform requires c < c0");
    QuadExt pivot = a * QuadExt(Rational(2, 3));
    ReductionStep step{SubstKind::Lemma2, Form::C21, Form::C21, pivot.to_string(),
                       render_c21(t), "x1 = (" + pivot.to_string() + ") - y"};
    return {t, step};
}

RootValue solve_q7(const QuadTarget& q, const Rational& width) {
    if (width.sign() <= 0) throw UsageError("solve_q7 needs width > 0");
    RootValue r;
    if (q.exact) {
        if (q.b.sign() < 0 || q.c.sign() <= 0) {
            throw UsageError("Q7 instance needs b >= 0 and c > 0");
        }
        if (q.b.is_rational() && q.c.is_rational()) {
            // (-b + sqrt(b^2 + 4c))/2 = -b/2 + sqrt((b/2)^2 + c).
            Rational half_b = q.b.rational_value() / 2;
            r.exact = true;
            r.value = QuadExt(-half_b, Rational(1), half_b * half_b + q.c.rational_value());
        } else {
            QuadExt disc = q.b * q.b + q.c * QuadExt(4);
            if (auto s = disc.exact_sqrt()) {
                r.exact = true;
                r.value = (*s - q.b) * QuadExt(Rational(1, 2));
            }
        }
        if (r.exact) {
            if (compare(r.value * r.value + q.b * r.value, q.c) != 0) {
                throw InternalError("q7 root does not satisfy its equation");
            }
            r.enclosure = r.value.to_interval(width);
            return r;
        }
        // Exact coefficients, irrational-over-the-field root: enclose.
        Rational w = width / 16;
        for (;;) {
            Interval b_iv = q.b.to_interval(w);
            Interval c_iv = q.c.to_interval(w);
            Interval disc = iv_add(iv_mul(b_iv, b_iv), iv_scale(c_iv, Rational(4)));
            Interval s = iv_sqrt(disc, w);
            Interval root = iv_scale(iv_sub(s, b_iv), Rational(1, 2));
            if (root.width() <= width) {
                r.enclosure = root;
                return r;
            }
            w = w / 16;
        }
    }
    // Interval-valued coefficients: best enclosure the inputs allow.
    Interval disc = iv_add(iv_mul(q.b_iv, q.b_iv), iv_scale(q.c_iv, Rational(4)));
    Rational w = width / 16;
    Interval s = iv_sqrt(disc, w);
    r.enclosure = iv_scale(iv_sub(s, q.b_iv), Rational(1, 2));
    return r;
}

} // namespace tusi
