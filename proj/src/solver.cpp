#include "tusi/solver.hpp"

#include <chrono>

#include "tusi/error.hpp"

namespace tusi {

namespace {

Rational ulp_of(unsigned base, unsigned digits) {
    mpz_class s;
    mpz_ui_pow_ui(s.get_mpz_t(), base, digits);
    return Rational(mpz_class(1), s);
}

DigitString digits_of_exact(const QuadExt& v, unsigned base, unsigned n) {
    auto refine = [&](const Rational& w) {
        return v.is_rational() ? Interval(v.rational_value()) : v.to_interval(w);
    };
    auto equals = [&](const Rational& r) { return compare(v, QuadExt(r)) == 0; };
    return digitize(refine, equals, base, n);
}

// Fraction digits needed so one ulp is at most `w`.
unsigned digits_for_width(unsigned base, const Rational& w) {
    unsigned n = 0;
    Rational u(1);
    while (u > w) {
        u = u / Rational(static_cast<long>(base));
        ++n;
    }
    return n;
}

// Unique positive solution of X^3 + a X^2 = c by digit extraction on a
// doubling bracket (the left side is strictly increasing on X > 0).
DigitString extract_c15(const QuadExt& a, const QuadExt& c, unsigned base,
                        unsigned frac_digits) {
    QEPoly poly{QuadExt(0), QuadExt(0), a, QuadExt(1)};
    Rational top(1);
    while (compare(poly_eval(poly, QuadExt(top)), c) < 0) top *= 2;
    return extract_monotone(poly, c, Interval(Rational(0), top), base, frac_digits);
}

struct PipelineState {
    const SolveOptions& opt;
    SolveReport& rep;
    Rational ulp;
};

void run_oracle(PipelineState& st, const GeneralPoly& p, const PipelineSummary& sum) {
    if (!st.opt.use_oracle) {
        st.rep.oracle_verdict = "skipped";
        return;
    }
    Rational width = st.ulp;
    Rational cap(1, 1000000000L);
    if (cap < width) width = cap;
    DiffReport d = differential_check(p, sum, width);
    if (d.ok) {
        st.rep.oracle_verdict = "agree";
    } else {
        st.rep.oracle_verdict = "mismatch: " + d.detail;
        throw InternalError("oracle disagreement: " + d.detail);
    }
}

void finish_impossible(PipelineState& st, const GeneralPoly& p, const std::string& why) {
    st.rep.case_label = "impossible";
    st.rep.case_kind = CaseKind::Impossible;
    if (!why.empty()) st.rep.notes.push_back(why);
    PipelineSummary sum;
    sum.kind = CaseKind::Impossible;
    run_oracle(st, p, sum);
}

void solve_q7_like(PipelineState& st, const CanonicalEquation& eq) {
    QuadTarget t;
    ReductionChain& chain = st.rep.chain;
    QuadExt offset(0);
    if (eq.form == Form::Q8) {
        auto [t7, step] = reduce_q8_to_q7(eq);
        t = t7;
        chain.steps.push_back(step);
        offset = QuadExt(eq.b);
    } else {
        t.exact = true;
        t.b = QuadExt(eq.b);
        t.c = QuadExt(eq.c);
    }
    RootValue rv = solve_q7(t, st.ulp);
    if (!rv.exact) throw InternalError("rational quadratic did not solve exactly");
    QuadExt root = rv.value + offset;
    if (root.sign() <= 0) throw InternalError("quadratic root not positive");

    RootReport rr;
    rr.label = "x";
    rr.digits = digits_of_exact(root, st.opt.base, st.opt.digits);
    rr.exact_form = root.to_string();
    st.rep.roots.push_back(rr);
    st.rep.case_label = "unique_root";
    st.rep.case_kind = CaseKind::UniqueRoot;

    PipelineSummary sum;
    sum.kind = CaseKind::UniqueRoot;
    sum.roots = {rr.digits.enclosure};
    sum.multiplicities = {1};
    run_oracle(st, eq.monic, sum);
}

void solve_c15(PipelineState& st, const CanonicalEquation& eq) {
    DigitString ds = extract_c15(QuadExt(eq.a), QuadExt(eq.c), st.opt.base, st.opt.digits);
    RootReport rr;
    rr.label = "x";
    rr.digits = ds;
    if (ds.exact) rr.exact_form = ds.value().to_string();
    st.rep.roots.push_back(rr);
    st.rep.case_label = "unique_root";
    st.rep.case_kind = CaseKind::UniqueRoot;

    PipelineSummary sum;
    sum.kind = CaseKind::UniqueRoot;
    sum.roots = {ds.enclosure};
    sum.multiplicities = {1};
    run_oracle(st, eq.monic, sum);
}

void solve_other_cubic(PipelineState& st, const CanonicalEquation& eq) {
    // Outside the conditionally solvable catalogue the sign pattern already
    // guarantees at least one positive root; the oracle isolates them all and
    // digit extraction runs on each refined enclosure.
    auto isolated = isolate_positive_roots(eq.monic);
    if (isolated.empty()) throw InternalError("other-cubic without a positive root");
    const GeneralPoly& monic = eq.monic;
    for (std::size_t i = 0; i < isolated.size(); ++i) {
        IsolatedRoot cur = isolated[i];
        auto refine = [&cur, &monic](const Rational& w) {
            cur = refine_root(cur, monic, w);
            return cur.interval;
        };
        auto equals = [&monic](const Rational& r) { return monic.eval(r).is_zero(); };
        RootReport rr;
        rr.label = isolated.size() == 1 ? "x" : "x" + std::to_string(i + 1);
        rr.digits = digitize(refine, equals, st.opt.base, st.opt.digits);
        rr.multiplicity = isolated[i].multiplicity;
        if (rr.digits.exact) rr.exact_form = rr.digits.value().to_string();
        st.rep.roots.push_back(rr);
    }
    if (isolated.size() == 1) {
        st.rep.case_label = "unique_root";
        st.rep.case_kind = CaseKind::UniqueRoot;
        PipelineSummary sum;
        sum.kind = CaseKind::UniqueRoot;
        sum.roots = {st.rep.roots[0].digits.enclosure};
        sum.multiplicities = {st.rep.roots[0].multiplicity};
        run_oracle(st, eq.monic, sum);
    } else {
        st.rep.case_label = "multiple_roots";
        st.rep.notes.push_back(
            "arrangement outside the conditionally solvable forms; roots reported "
            "from the verification path");
        st.rep.oracle_verdict = st.opt.use_oracle ? "agree" : "skipped";
    }
}

// Digits of x0 + sgn*X where X is re-extractable at any precision.
template <class Extract, class Equals>
DigitString digits_of_shifted(const QuadExt& x0, int sgn, Extract extract,
                              Equals equals, unsigned base, unsigned n) {
    auto refine = [&](const Rational& w) {
        Rational half = w / 2;
        DigitString dx = extract(digits_for_width(base, half));
        Interval x0e =
            x0.is_rational() ? Interval(x0.rational_value()) : x0.to_interval(half);
        return sgn > 0 ? iv_add(x0e, dx.enclosure) : iv_sub(x0e, dx.enclosure);
    };
    return digitize(refine, equals, base, n);
}

void solve_conditional(PipelineState& st, const CanonicalEquation& eq) {
    const TargetFunction tf = target_function(eq);
    MaximumReport mr;
    try {
        mr = critical_point(tf);
    } catch (const PositivityImpossible& e) {
        finish_impossible(st, eq.monic, e.what());
        return;
    }
    st.rep.maximum = mr;

    CaseOutcome co = decide_case(tf, mr);
    st.rep.outcome = co;
    st.rep.case_kind = co.kind;
    st.rep.case_label = std::string(case_name(co.kind));

    if (eq.form == Form::C21 && co.kind != CaseKind::Impossible) {
        st.rep.lemma2 = lemma2_classify(eq);
    }

    if (co.kind == CaseKind::Impossible) {
        PipelineSummary sum;
        sum.kind = CaseKind::Impossible;
        sum.x0 = mr.x0;
        run_oracle(st, eq.monic, sum);
        return;
    }
    if (co.kind == CaseKind::DoubleRoot) {
        RootReport rr;
        rr.label = "x";
        rr.digits = digits_of_exact(mr.x0, st.opt.base, st.opt.digits);
        rr.multiplicity = 2;
        rr.exact_form = mr.x0.to_string();
        st.rep.roots.push_back(rr);
        PipelineSummary sum;
        sum.kind = CaseKind::DoubleRoot;
        sum.x0 = mr.x0;
        sum.roots = {rr.digits.enclosure};
        sum.multiplicities = {2};
        run_oracle(st, eq.monic, sum);
        return;
    }

    // TwoRoots. Large root first (uniform order for every form).
    if (eq.form == Form::C22) {
        st.rep.notes.push_back(
            "historical order for this form computes the small root first; the "
            "uniform order used here is root-for-root equivalent");
    }
    auto [c15, step_large] = shift_for_large_root(tf, mr);
    st.rep.chain.steps.push_back(step_large);

    auto extract_large = [&](unsigned k) {
        return extract_c15(c15.a, c15.c, st.opt.base, k);
    };
    auto is_x2 = [&](const Rational& r) {
        return target_eval(tf, r) == tf.c && compare(QuadExt(r), mr.x0) > 0;
    };
    DigitString x2d = digits_of_shifted(mr.x0, +1, extract_large, is_x2, st.opt.base,
                                        st.opt.digits);

    DigitString x1d;
    if (eq.form == Form::C21) {
        Lemma2Class cls = *st.rep.lemma2;
        if (cls == Lemma2Class::Above) {
            st.rep.chain.steps.push_back(
            lemma2_transform(QuadExt(eq.a), QuadExt(eq.c)).second);
        }
        x1d = extract_c21_small(QuadExt(eq.a), QuadExt(eq.c), cls, st.opt.base,
                                st.opt.digits);

        // The quadratic detour determines x1 from x2; run it as an internal
        // cross-check and record the step.
        RootValue x2v;
        if (x2d.exact) {
            x2v.exact = true;
            x2v.value = QuadExt(x2d.value());
        }
        x2v.enclosure = x2d.enclosure;
        unsigned extra = guard_digits(st.opt.base);
        for (int attempt = 0;; ++attempt) {
            auto [qt, step_q] = small_root_via_quadratic(QuadExt(eq.a), x2v);
            RootValue xq = solve_q7(qt, st.ulp);
            QuadExt b_plus_root;
            Interval x1_detour;
            if (qt.exact && xq.exact) {
                b_plus_root = qt.b + xq.value;
                if (compare(target_eval(tf, b_plus_root), QuadExt(tf.c)) != 0) {
                    throw InternalError("exact quadratic detour missed the equation");
                }
                x1_detour = b_plus_root.is_rational()
                                ? Interval(b_plus_root.rational_value())
                                : b_plus_root.to_interval(st.ulp);
            } else {
                x1_detour = iv_add(qt.exact ? qt.b.to_interval(st.ulp) : qt.b_iv,
                                   xq.enclosure);
            }
            if (!x1_detour.intersects(x1d.enclosure)) {
                throw InternalError("quadratic detour disagrees with the digit path");
            }
            if (x1_detour.width() <= st.ulp || (qt.exact && xq.exact)) {
                st.rep.chain.steps.push_back(step_q);
                break;
            }
            if (attempt >= 24) throw InternalError("quadratic detour failed to converge");
            // Widen x2's precision and retry with tighter coefficients.
            DigitString finer = extract_large(st.opt.digits + extra);
            Interval x0e = mr.x0.is_rational() ? Interval(mr.x0.rational_value())
                                               : mr.x0.to_interval(ulp_of(st.opt.base,
                                                                          st.opt.digits + extra));
            x2v.enclosure = iv_add(x0e, finer.enclosure);
            x2v.exact = false;
            extra *= 2;
        }
    } else {
        auto [c21t, step_small] = shift_for_small_root(tf, mr);
        st.rep.chain.steps.push_back(step_small);
        Lemma2Class cls = lemma2_classify(c21t.a, c21t.c);
        st.rep.notes.push_back("reduced small-root instance classifies " +
                               std::string(lemma2_name(cls)));
        if (cls == Lemma2Class::Above) {
            st.rep.chain.steps.push_back(lemma2_transform(c21t.a, c21t.c).second);
        }
        auto extract_small = [&](unsigned k) {
            return extract_c21_small(c21t.a, c21t.c, cls, st.opt.base, k);
        };
        auto is_x1 = [&](const Rational& r) {
            return target_eval(tf, r) == tf.c && compare(QuadExt(r), mr.x0) < 0;
        };
        x1d = digits_of_shifted(mr.x0, -1, extract_small, is_x1, st.opt.base,
                                st.opt.digits);
    }

    RootReport r1;
    r1.label = "x1";
    r1.digits = x1d;
    if (x1d.exact) r1.exact_form = x1d.value().to_string();
    RootReport r2;
    r2.label = "x2";
    r2.digits = x2d;
    if (x2d.exact) r2.exact_form = x2d.value().to_string();
    st.rep.roots.push_back(r1);
    st.rep.roots.push_back(r2);

    if (st.rep.chain.steps.size() > 4) {
        throw InternalError("reduction chain exceeded four steps");
    }

    PipelineSummary sum;
    sum.kind = CaseKind::TwoRoots;
    sum.x0 = mr.x0;
    sum.roots = {x1d.enclosure, x2d.enclosure};
    sum.multiplicities = {1, 1};
    run_oracle(st, eq.monic, sum);
}

} // namespace

SolveReport solve_general(const GeneralPoly& p, const std::string& input_echo,
                          const SolveOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    SolveReport rep;
    rep.input = input_echo;
    rep.digits_requested = opt.digits;
    rep.base = opt.base;
    rep.classification = classify(p);
    PipelineState st{opt, rep, ulp_of(opt.base, opt.digits)};

    if (rep.classification.zero_roots > 0) {
        rep.notes.push_back("x = 0 factored out (multiplicity " +
                            std::to_string(rep.classification.zero_roots) +
                            "); positive roots only are reported");
    }

    switch (rep.classification.terminal) {
        case Classified::Terminal::ImpossibleBySigns:
            finish_impossible(st, p, "every term is positive for x > 0");
            break;
        case Classified::Terminal::LinearRoot: {
            const Rational& r = rep.classification.linear_root;
            if (r.sign() > 0) {
                RootReport rr;
                rr.label = "x";
                rr.digits = digits_of_exact(QuadExt(r), opt.base, opt.digits);
                rr.exact_form = r.to_string();
                rep.roots.push_back(rr);
                rep.case_label = "unique_root";
                rep.case_kind = CaseKind::UniqueRoot;
                PipelineSummary sum;
                sum.kind = CaseKind::UniqueRoot;
                sum.roots = {rr.digits.enclosure};
                sum.multiplicities = {1};
                run_oracle(st, p, sum);
            } else {
                finish_impossible(st, p, "the residual linear factor has no positive root");
            }
            break;
        }
        case Classified::Terminal::Equation: {
            const CanonicalEquation& eq = *rep.classification.equation;
            rep.form_label = std::string(form_name(eq.form));
            switch (eq.form) {
                case Form::Q7:
                case Form::Q8:
                    solve_q7_like(st, eq);
                    break;
                case Form::C15:
                    solve_c15(st, eq);
                    break;
                case Form::OtherCubic:
                    solve_other_cubic(st, eq);
                    break;
                default:
                    solve_conditional(st, eq);
                    break;
            }
            break;
        }
    }

    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

SolveReport solve_text(const std::string& text, const SolveOptions& opt) {
    GeneralPoly p = parse_equation(text);
    return solve_general(p, text, opt);
}

} // namespace tusi
