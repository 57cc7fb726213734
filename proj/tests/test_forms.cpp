#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "tusi/forms.hpp"

using namespace tusi;

namespace {

GeneralPoly gp(long c3, long c2, long c1, long c0) {
    return GeneralPoly{Rational(c3), Rational(c2), Rational(c1), Rational(c0)};
}

} // namespace

TEST_CASE("parsing the stated instances") {
    CHECK(parse_equation("x^3 + 2 = 3*x^2") == gp(1, -3, 0, 2));
    CHECK(parse_equation("3*x - x^3 = 1") == gp(-1, 0, 3, -1));
    CHECK(parse_equation("x^2 + 2*x = 3") == gp(0, 1, 2, -3));
}

TEST_CASE("parser accepts the grammar variants") {
    CHECK(parse_equation("x^3+2=3x^2") == gp(1, -3, 0, 2)); // '*' optional
    CHECK(parse_equation("  x ^ 3 + 2 = 3 x^2 ") == gp(1, -3, 0, 2));
    GeneralPoly frac = parse_equation("x^2 + 5/2*x = 1");
    CHECK(frac.c1 == Rational(5, 2));
    CHECK(frac == (GeneralPoly{Rational(0), Rational(1), Rational(5, 2), Rational(-1)}));
    CHECK(parse_equation("-x^3 + 3x = 1") == gp(-1, 0, 3, -1)); // leading sign
    CHECK(parse_equation("x + x + x = 3") == gp(0, 0, 3, -3));  // like terms collect
    CHECK(parse_equation("0 = 1 - x") == gp(0, 0, 1, -1));
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(parse_equation("x^4 = 1"), ParseError);
    CHECK_THROWS_AS(parse_equation("x^0 = 1"), ParseError);
    CHECK_THROWS_AS(parse_equation("x + = 1"), ParseError);
    CHECK_THROWS_AS(parse_equation("x + 1"), ParseError); // no '='
    CHECK_THROWS_AS(parse_equation("x = x"), ParseError); // zero polynomial
    CHECK_THROWS_AS(parse_equation("1/0 = x"), ParseError);
    CHECK_THROWS_AS(parse_equation("x = 1 y"), ParseError); // trailing junk
    try {
        parse_equation("x^3 + ? = 1");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 6);
    }
}

TEST_CASE("classification of the stated instances") {
    auto c21 = classify(gp(1, -3, 0, 2));
    REQUIRE(c21.equation.has_value());
    CHECK(c21.equation->form == Form::C21);
    CHECK(c21.equation->a == Rational(3));
    CHECK(c21.equation->c == Rational(2));

    auto c22 = classify(gp(1, 0, -3, 1));
    REQUIRE(c22.equation.has_value());
    CHECK(c22.equation->form == Form::C22);
    CHECK(c22.equation->b == Rational(3));
    CHECK(c22.equation->c == Rational(1));

    auto c24 = classify(gp(1, -7, 8, 4));
    REQUIRE(c24.equation.has_value());
    CHECK(c24.equation->form == Form::C24);
    CHECK(c24.equation->a == Rational(7));
    CHECK(c24.equation->b == Rational(8));
    CHECK(c24.equation->c == Rational(4));
}

TEST_CASE("classification covers every cubic sign pattern") {
    CHECK(classify(gp(1, 1, 0, -2)).equation->form == Form::C15);
    CHECK(classify(gp(1, 1, 1, -2)).equation->form == Form::OtherCubic);
    CHECK(classify(gp(1, 0, 0, -2)).equation->form == Form::OtherCubic); // x^3 = 2
    CHECK(classify(gp(1, 2, -3, 4)).equation->form == Form::C23);
    CHECK(classify(gp(1, -2, -3, 4)).equation->form == Form::C25);
    CHECK(classify(gp(1, -6, 11, -6)).equation->form == Form::OtherCubic);
    CHECK(classify(gp(1, 1, 1, 2)).terminal == Classified::Terminal::ImpossibleBySigns);
    // Non-monic input divides through, sign flips included.
    CHECK(classify(gp(-2, 6, 0, -4)).equation->form == Form::C21);
    CHECK(classify(gp(-2, 6, 0, -4)).equation->a == Rational(3));
}

TEST_CASE("classification of quadratics") {
    CHECK(classify(gp(0, 1, 2, -3)).equation->form == Form::Q7);
    CHECK(classify(gp(0, 1, 0, -3)).equation->form == Form::Q7); // b = 0 edge
    auto q8 = classify(gp(0, 1, -2, -3));
    CHECK(q8.equation->form == Form::Q8);
    CHECK(q8.equation->b == Rational(2));
    CHECK(q8.equation->c == Rational(3));
    CHECK(classify(gp(0, 1, 1, 1)).terminal == Classified::Terminal::ImpossibleBySigns);
    CHECK_THROWS_AS(classify(gp(0, 1, -5, 6)), UnsupportedFormError);
}

TEST_CASE("roots at the origin factor out and the quotient reclassifies") {
    auto a = classify(gp(1, -3, 0, 0)); // x^3 = 3x^2
    CHECK(a.zero_roots == 2);
    CHECK(a.terminal == Classified::Terminal::LinearRoot);
    CHECK(a.linear_root == Rational(3));

    auto b = classify(gp(1, -2, -3, 0)); // x(x - 3)(x + 1)
    CHECK(b.zero_roots == 1);
    CHECK(b.equation->form == Form::Q8);

    // The quotient can land outside the catalogue: x(x - 1)(x - 2) leaves a
    // quadratic with the constant opposite the x term.
    CHECK_THROWS_AS(classify(gp(1, -3, 2, 0)), UnsupportedFormError);

    auto c = classify(gp(1, 0, 0, 0)); // x^3 = 0
    CHECK(c.zero_roots == 3);
    CHECK(c.terminal == Classified::Terminal::ImpossibleBySigns);
}

TEST_CASE("target function table") {
    auto tf21 = target_function(make_canonical(Form::C21, 3, 0, 2));
    CHECK(tf21.alpha == Rational(3));
    CHECK(tf21.beta == Rational(0));
    CHECK(tf21.c == Rational(2));

    auto tf23 = target_function(make_canonical(Form::C23, 1, 1, Rational(5, 27)));
    CHECK(tf23.alpha == Rational(-1));
    CHECK(tf23.beta == Rational(1));

    auto tf24 = target_function(make_canonical(Form::C24, 7, 8, 4));
    CHECK(tf24.alpha == Rational(7));
    CHECK(tf24.beta == Rational(-8));

    auto tf22 = target_function(make_canonical(Form::C22, 0, 3, 1));
    CHECK(tf22.alpha == Rational(0));
    CHECK(tf22.beta == Rational(3));

    auto tf25 = target_function(make_canonical(Form::C25, 2, 3, 4));
    CHECK(tf25.alpha == Rational(2));
    CHECK(tf25.beta == Rational(3));

    CHECK_THROWS_AS(target_function(make_canonical(Form::Q7, 0, 2, 3)), UsageError);
}

TEST_CASE("round trip: expand then reclassify is the identity") {
    test::Rng rng(19);
    for (int i = 0; i < 400; ++i) {
        Form f = static_cast<Form>(rng.integer(0, 7)); // Q7..C25
        Rational a = rng.rational(60), b = rng.rational(60), c = rng.rational(60);
        CanonicalEquation eq = make_canonical(f, a, b, c);
        auto back = classify(expand(eq));
        REQUIRE(back.equation.has_value());
        CHECK(back.equation->form == eq.form);
        CHECK(back.equation->a == eq.a);
        CHECK(back.equation->b == eq.b);
        CHECK(back.equation->c == eq.c);
    }
}

TEST_CASE("f(x) = c holds exactly iff the two-sided equation holds") {
    test::Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        Form f = static_cast<Form>(rng.integer(3, 7)); // C21..C25
        CanonicalEquation eq = make_canonical(f, rng.rational(50), rng.rational(50),
                                              rng.rational(50));
        TargetFunction tf = target_function(eq);
        Rational x = rng.rational(40);
        // f(x) - c = -(monic arrangement evaluated at x), identically.
        CHECK(target_eval(tf, x) - tf.c == -eq.monic.eval(x));
    }
}
