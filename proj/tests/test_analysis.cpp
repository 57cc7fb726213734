#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tusi/analysis.hpp"
#include "tusi/oracle.hpp"

using namespace tusi;

namespace {

TargetFunction tf_of(Form f, long a, long b, long c) {
    return target_function(make_canonical(f, Rational(a), Rational(b), Rational(c)));
}

TargetFunction tf_of(Form f, Rational a, Rational b, Rational c) {
    return target_function(make_canonical(f, a, b, c));
}

// Random instance of one of the five conditionally solvable forms.
TargetFunction random_tf(test::Rng& rng, long top = 60) {
    for (;;) {
        Form f = static_cast<Form>(rng.integer(3, 7));
        Rational a = rng.rational(top), b = rng.rational(top), c = rng.rational(top);
        if (f == Form::C24 && a * a <= b * 4) continue;
        return tf_of(f, a, b, c);
    }
}

} // namespace

TEST_CASE("critical point on the stated instances") {
    auto m21 = critical_point(tf_of(Form::C21, 3, 0, 2));
    CHECK(m21.x0 == QuadExt(2));
    CHECK(m21.c0 == QuadExt(4));
    CHECK(m21.domain_hi == QuadExt(3));
    CHECK(m21.d == Rational(9));

    auto m22 = critical_point(tf_of(Form::C22, 0, 3, 1));
    CHECK(m22.x0 == QuadExt(1));
    CHECK(m22.c0 == QuadExt(2));
    CHECK(m22.domain_hi == QuadExt::sqrt_of(Rational(3)));

    auto m24 = critical_point(tf_of(Form::C24, 7, 8, 4));
    CHECK(m24.d == Rational(25));
    CHECK(m24.x0 == QuadExt(4));
    CHECK(m24.c0 == QuadExt(16));
    CHECK(m24.domain_hi == QuadExt(Rational(7, 2), Rational(1, 2), Rational(17)));
}

TEST_CASE("closed forms specialize: x0 = 2a/3 for C21, sqrt(b/3) for C22") {
    test::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        Rational a = rng.rational(), b = rng.rational(), c = rng.rational();
        auto m21 = critical_point(tf_of(Form::C21, a, Rational(0), c));
        CHECK(m21.x0 == QuadExt(a * Rational(2, 3)));
        auto m22 = critical_point(tf_of(Form::C22, Rational(0), b, c));
        CHECK(m22.x0 * m22.x0 == QuadExt(b / 3)); // x0 = sqrt(b/3) exactly
        CHECK(m22.x0.sign() > 0);
    }
}

TEST_CASE("C24 positivity precondition") {
    CHECK_THROWS_AS(critical_point(tf_of(Form::C24, 2, 2, 1)), PositivityImpossible);
    // Boundary a^2 = 4b is impossible as well.
    CHECK_THROWS_AS(critical_point(tf_of(Form::C24, 2, 1, 1)), PositivityImpossible);
    CHECK_NOTHROW(critical_point(tf_of(Form::C24, 3, 2, 1)));
}

TEST_CASE("critical-point identities hold exactly on random instances") {
    test::Rng rng(37);
    for (int i = 0; i < 300; ++i) {
        TargetFunction tf = random_tf(rng);
        MaximumReport mr = critical_point(tf);
        // f'(x0) = 0 as a field identity.
        QuadExt fp = QuadExt(-3) * mr.x0 * mr.x0 + QuadExt(tf.alpha * 2) * mr.x0 +
                     QuadExt(tf.beta);
        CHECK(fp.is_zero());
        // (3 x0 - alpha)^2 = alpha^2 + 3 beta.
        QuadExt ap = QuadExt(3) * mr.x0 - QuadExt(tf.alpha);
        CHECK(ap * ap == QuadExt(mr.d));
        CHECK(mr.c0 == target_eval(tf, mr.x0));
    }
}

TEST_CASE("trichotomy on the stated C21 instances") {
    auto tf5 = tf_of(Form::C21, 3, 0, 5);
    CHECK(decide_case(tf5, critical_point(tf5)).kind == CaseKind::Impossible);

    auto tf4 = tf_of(Form::C21, 3, 0, 4);
    auto co4 = decide_case(tf4, critical_point(tf4));
    CHECK(co4.kind == CaseKind::DoubleRoot);
    CHECK(co4.double_root == QuadExt(2));

    auto tf2 = tf_of(Form::C21, 3, 0, 2);
    auto co2 = decide_case(tf2, critical_point(tf2));
    REQUIRE(co2.kind == CaseKind::TwoRoots);
    // True roots are 1 and 1 + sqrt(3).
    CHECK(co2.bracket_small.contains(Rational(1)));
    QuadExt x2(1, 1, 3);
    CHECK(compare(QuadExt(co2.bracket_large.lo), x2) <= 0);
    CHECK(compare(x2, QuadExt(co2.bracket_large.hi)) <= 0);
}

TEST_CASE("a C23 double root away from rational x0 inputs") {
    auto tf = tf_of(Form::C23, Rational(1), Rational(1), Rational(5, 27));
    auto mr = critical_point(tf);
    CHECK(mr.x0 == QuadExt(Rational(1, 3)));
    CHECK(decide_case(tf, mr).kind == CaseKind::DoubleRoot);
}

TEST_CASE("trichotomy agrees with sign of c0 - c on random instances") {
    test::Rng rng(41);
    for (int i = 0; i < 300; ++i) {
        TargetFunction tf = random_tf(rng);
        MaximumReport mr = critical_point(tf);
        CaseOutcome co = decide_case(tf, mr);
        int s = compare(mr.c0, QuadExt(tf.c));
        CaseKind expect = s > 0   ? CaseKind::TwoRoots
                          : s == 0 ? CaseKind::DoubleRoot
                                   : CaseKind::Impossible;
        CHECK(co.kind == expect);
    }
}

TEST_CASE("TwoRoots brackets isolate exactly one root each, inside bounds") {
    test::Rng rng(43);
    int seen = 0;
    while (seen < 120) {
        TargetFunction tf = random_tf(rng, 30);
        MaximumReport mr = critical_point(tf);
        CaseOutcome co = decide_case(tf, mr);
        if (co.kind != CaseKind::TwoRoots) continue;
        ++seen;

        // Endpoint placement: bracket_small inside (0, x0), bracket_large
        // inside (x0, domain_hi).
        CHECK(co.bracket_small.lo.sign() > 0);
        CHECK(compare(QuadExt(co.bracket_small.hi), mr.x0) < 0);
        CHECK(compare(mr.x0, QuadExt(co.bracket_large.lo)) < 0);
        CHECK(compare_via_intervals(QuadExt(co.bracket_large.hi), mr.domain_hi) < 0);

        // Exactly one true root inside each bracket, per the oracle.
        GeneralPoly monic{Rational(1), -tf.alpha, -tf.beta, tf.c};
        auto roots = isolate_positive_roots(monic);
        REQUIRE(roots.size() == 2);
        auto count_in = [&](const Interval& bracket) {
            Rational w = bracket.width() / 4;
            if (w.is_zero()) w = Rational(1, 1 << 20);
            int n = 0;
            for (auto r : roots) {
                r = refine_root(r, monic, w);
                if (bracket.intersects(r.interval)) ++n;
            }
            return n;
        };
        CHECK(count_in(co.bracket_small) == 1);
        CHECK(count_in(co.bracket_large) == 1);
    }
}

TEST_CASE("lemma 2 classification on the stated instances") {
    CHECK(lemma2_classify(make_canonical(Form::C21, 3, 0, 2)) == Lemma2Class::Equal);
    CHECK(lemma2_classify(make_canonical(Form::C21, 3, 0, 1)) == Lemma2Class::Below);
    CHECK(lemma2_classify(make_canonical(Form::C21, 3, 0, 3)) == Lemma2Class::Above);
    CHECK_THROWS_AS(lemma2_classify(make_canonical(Form::C22, 0, 3, 1)), UsageError);
}

TEST_CASE("lemma 2 agrees with the oracle's position of x1 relative to a/3") {
    test::Rng rng(47);
    int seen = 0;
    while (seen < 150) {
        Rational a = rng.rational(40), c = rng.rational(40);
        CanonicalEquation eq = make_canonical(Form::C21, a, Rational(0), c);
        TargetFunction tf = target_function(eq);
        MaximumReport mr = critical_point(tf);
        if (decide_case(tf, mr).kind != CaseKind::TwoRoots) continue;
        ++seen;
        Lemma2Class cls = lemma2_classify(eq);

        auto roots = isolate_positive_roots(eq.monic);
        REQUIRE(roots.size() == 2);
        Rational third = a / 3;
        IsolatedRoot x1 = roots[0];
        if (cls == Lemma2Class::Equal) {
            // x1 = a/3 exactly: the refined interval pins the rational point.
            x1 = refine_root(x1, eq.monic, Rational(1, 1000000));
            CHECK(eq.monic.eval(third).is_zero());
            CHECK(x1.interval.contains(third));
        } else {
            // Refine until a/3 is excluded, then compare sides.
            Rational w(1, 1024);
            for (;;) {
                x1 = refine_root(x1, eq.monic, w);
                if (!x1.interval.contains(third)) break;
                w = w / 16;
            }
            if (cls == Lemma2Class::Above) {
                CHECK(third < x1.interval.lo);
            } else {
                CHECK(x1.interval.hi < third);
            }
        }
    }
}

TEST_CASE("maximum property: stated samples for C21(a=3)") {
    auto tf = tf_of(Form::C21, 3, 0, 2);
    auto mr = critical_point(tf);
    CHECK(target_eval(tf, Rational(1)) == Rational(2));         // f(1) = 2 < 4
    CHECK(target_eval(tf, Rational(5, 2)) == Rational(25, 8));  // f(5/2) = 25/8 < 4
    CHECK(compare(mr.c0, QuadExt(target_eval(tf, Rational(1)))) > 0);
    CHECK(compare(mr.c0, QuadExt(target_eval(tf, Rational(5, 2)))) > 0);
    // Strictness survives arbitrarily close rational approach to x0.
    Rational close = Rational(2) - Rational(1, mpz_class("1000000000000"));
    CHECK(compare(mr.c0, QuadExt(target_eval(tf, close))) > 0);
}

TEST_CASE("verify_maximum passes on random instances") {
    test::Rng rng(53);
    for (int i = 0; i < 60; ++i) {
        TargetFunction tf = random_tf(rng);
        MaximumReport mr = critical_point(tf);
        MaximumCheck chk = verify_maximum(tf, mr, 10, test::seed() + i);
        CHECK(chk.pass);
        CHECK(!chk.witness.has_value());
    }
    CHECK_THROWS_AS(
        verify_maximum(tf_of(Form::C21, 3, 0, 2),
                       critical_point(tf_of(Form::C21, 3, 0, 2)), 0, 1),
        UsageError);
}

TEST_CASE("C24 impossibility whenever b >= a^2/4") {
    test::Rng rng(59);
    for (int i = 0; i < 200; ++i) {
        Rational a = rng.rational(100);
        Rational b = a * a / 4 + rng.rational(100); // strictly above the boundary
        Rational c = rng.rational(100);
        auto eq = make_canonical(Form::C24, a, b, c);
        CHECK_THROWS_AS(critical_point(target_function(eq)), PositivityImpossible);
        CHECK(isolate_positive_roots(eq.monic).empty());
    }
}
