#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "tusi/cli.hpp"
#include "tusi/report.hpp"
#include "tusi/solver.hpp"

using namespace tusi;

namespace {

SolveOptions opts(unsigned digits = 12, unsigned base = 10) {
    SolveOptions o;
    o.digits = digits;
    o.base = base;
    return o;
}

} // namespace

TEST_CASE("worked two-root instance end to end") {
    SolveReport rep = solve_text("x^3 + 2 = 3x^2", opts(6));
    CHECK(rep.form_label == "C21");
    CHECK(rep.case_label == "two_roots");
    REQUIRE(rep.lemma2.has_value());
    CHECK(*rep.lemma2 == Lemma2Class::Equal);
    REQUIRE(rep.maximum.has_value());
    CHECK(rep.maximum->x0 == QuadExt(2));
    CHECK(rep.maximum->c0 == QuadExt(4));

    REQUIRE(rep.roots.size() == 2);
    CHECK(rep.roots[0].digits.exact);
    CHECK(rep.roots[0].digits.value() == Rational(1));
    CHECK(rep.roots[1].digits.str() == "2.732050");
    CHECK(rep.oracle_verdict == "agree");

    REQUIRE(rep.chain.steps.size() == 2);
    CHECK(rep.chain.steps[0].kind == SubstKind::ShiftPlus);
    CHECK(rep.chain.steps[1].kind == SubstKind::Offset);
}

TEST_CASE("impossible and double-root instances") {
    SolveReport imp = solve_text("x^3 + 5 = 3x^2", opts());
    CHECK(imp.case_label == "impossible");
    CHECK(imp.roots.empty());
    CHECK(imp.maximum->c0 == QuadExt(4));
    CHECK(!imp.lemma2.has_value());
    CHECK(imp.oracle_verdict == "agree");

    SolveReport dbl = solve_text("x^3 + 4 = 3x^2", opts());
    CHECK(dbl.case_label == "double_root");
    REQUIRE(dbl.roots.size() == 1);
    CHECK(dbl.roots[0].digits.value() == Rational(2));
    CHECK(dbl.roots[0].multiplicity == 2);
}

TEST_CASE("every conditionally solvable form solves and verifies") {
    // C22 carries a note about the historical ordering.
    SolveReport c22 = solve_text("x^3 + 1 = 3*x", opts());
    CHECK(c22.form_label == "C22");
    CHECK(c22.case_label == "two_roots");
    bool noted = false;
    for (const auto& n : c22.notes) noted = noted || n.find("historical") != std::string::npos;
    CHECK(noted);

    SolveReport c23 = solve_text("x^3 + x^2 + 5/27 = x", opts());
    CHECK(c23.form_label == "C23");
    CHECK(c23.case_label == "double_root");
    // 1/3 pins exactly in the enclosure even though it is off the digit grid.
    CHECK(c23.roots[0].digits.enclosure == Interval(Rational(1, 3)));
    CHECK(c23.roots[0].digits.str() == "0.333333333333");

    SolveReport c24 = solve_text("x^3 + 8*x + 4 = 7*x^2", opts());
    CHECK(c24.case_label == "two_roots");
    CHECK(c24.roots[0].digits.exact);
    CHECK(c24.roots[0].digits.value() == Rational(2));

    SolveReport c25 = solve_text("x^3 + 1 = x^2 + x", opts());
    CHECK(c25.form_label == "C25");
    CHECK(c25.oracle_verdict == "agree");

    // C24 under the positivity precondition.
    SolveReport c24i = solve_text("x^3 + 2*x + 1 = 2*x^2", opts());
    CHECK(c24i.case_label == "impossible");
}

TEST_CASE("quadratics and the always-solvable cubic") {
    SolveReport q7 = solve_text("x^2 + 2*x = 3", opts());
    CHECK(q7.form_label == "Q7");
    CHECK(q7.case_label == "unique_root");
    CHECK(q7.roots[0].digits.value() == Rational(1));

    SolveReport q8 = solve_text("x^2 - 2*x = 3", opts());
    CHECK(q8.form_label == "Q8");
    REQUIRE(q8.chain.steps.size() == 1);
    CHECK(q8.chain.steps[0].kind == SubstKind::Offset);
    CHECK(q8.roots[0].digits.value() == Rational(3));

    SolveReport c15 = solve_text("x^3 + 3*x^2 = 2", opts(6));
    CHECK(c15.form_label == "C15");
    CHECK(c15.roots[0].digits.str() == "0.732050");
}

TEST_CASE("other-cubic arrangements") {
    SolveReport one = solve_text("x^3 = 2", opts(6));
    CHECK(one.form_label == "other-cubic");
    CHECK(one.case_label == "unique_root");
    CHECK(one.roots[0].digits.str() == "1.259921"); // cbrt(2)

    // Three positive roots: (x-1)(x-2)(x-3) arranged as x^3 + 11x = 6x^2 + 6.
    SolveReport three = solve_text("x^3 + 11*x = 6*x^2 + 6", opts());
    CHECK(three.case_label == "multiple_roots");
    REQUIRE(three.roots.size() == 3);
    CHECK(three.roots[0].digits.value() == Rational(1));
    CHECK(three.roots[1].digits.value() == Rational(2));
    CHECK(three.roots[2].digits.value() == Rational(3));
}

TEST_CASE("degenerate inputs") {
    SolveReport lin = solve_text("x^3 = 3*x^2", opts());
    CHECK(lin.classification.zero_roots == 2);
    CHECK(lin.case_label == "unique_root");
    CHECK(lin.roots[0].digits.value() == Rational(3));

    SolveReport none = solve_text("x^3 + x + 1 = 0", opts());
    CHECK(none.case_label == "impossible");

    CHECK_THROWS_AS(solve_text("x^2 + 6 = 5*x", opts()), UnsupportedFormError);
    CHECK_THROWS_AS(solve_text("x^4 = 1", opts()), ParseError);
}

TEST_CASE("base-60 digits are consistent with base 10") {
    SolveReport rep = solve_text("x^3 + 2 = 3x^2", opts(7, 60));
    REQUIRE(rep.roots.size() == 2);
    const DigitString& x2 = rep.roots[1].digits;
    CHECK(x2.base == 60);
    CHECK(x2.str().substr(0, 11) == "2;43,55,22,");

    SolveReport rep10 = solve_text("x^3 + 2 = 3x^2", opts(12, 10));
    CHECK(rep10.roots[1].digits.enclosure.intersects(x2.enclosure));
}

TEST_CASE("json rendering round-trips byte-identically") {
    for (const char* eq : {"x^3 + 2 = 3x^2", "x^3 + 5 = 3x^2", "x^2 - 2*x = 3",
                           "x^3 + 8*x + 4 = 7*x^2"}) {
        SolveReport rep = solve_text(eq, opts(6));
        std::string once = render_json(rep);
        std::string again = nlohmann::ordered_json::parse(once).dump();
        CHECK(once == again);
    }
}

TEST_CASE("json carries the documented fields") {
    SolveReport rep = solve_text("x^3 + 2 = 3x^2", opts(6));
    auto j = nlohmann::ordered_json::parse(render_json(rep));
    CHECK(j["input"] == "x^3 + 2 = 3x^2");
    CHECK(j["form"] == "C21");
    CHECK(j["x0"]["p"] == "2");
    CHECK(j["x0"]["q"] == "0");
    CHECK(j["c0"]["p"] == "4");
    CHECK(j["case"] == "two_roots");
    CHECK(j["lemma2"] == "equal");
    CHECK(j["chain"].size() == 2);
    CHECK(j["chain"][0]["kind"] == "shift_plus");
    CHECK(j["roots"].size() == 2);
    CHECK(j["roots"][0]["digits"] == "1.000000");
    CHECK(j["roots"][0]["multiplicity"] == 1);
    CHECK(j["roots"][1]["base"] == 10);
    CHECK(j["oracle"]["verdict"] == "agree");
    // Canonical key order.
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"input", "form", "x0", "c0", "case",
                                           "lemma2", "chain", "roots", "oracle"});
}

TEST_CASE("trace output lists the stages in pipeline order") {
    SolveReport rep = solve_text("x^3 + 2 = 3x^2", opts(6));
    std::string text = render_text(rep, true);
    auto pos = [&](const char* s) { return text.find(s); };
    REQUIRE(pos("-- domain --") != std::string::npos);
    CHECK(pos("form:") < pos("-- domain --"));
    CHECK(pos("-- domain --") < pos("-- maximum --"));
    CHECK(pos("-- maximum --") < pos("-- case --"));
    CHECK(pos("-- case --") < pos("-- reductions --"));
    CHECK(pos("-- reductions --") < pos("-- extraction --"));
}

TEST_CASE("cli single equation") {
    std::ostringstream out, err;
    int code = run_cli({"solve", "x^3 + 2 = 3x^2", "--digits", "6"}, out, err);
    CHECK(code == 0);
    CHECK(out.str().find("two_roots") != std::string::npos);
    CHECK(out.str().find("2.732050") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(run_cli({"solve", "x^3 + 5 = 3x^2"}, out2, err2) == 0); // impossible is success

    std::ostringstream out3, err3;
    CHECK(run_cli({"solve", "x^3 +"}, out3, err3) == 2);

    std::ostringstream out4, err4;
    CHECK(run_cli({"solve", "x^2 + 6 = 5*x"}, out4, err4) == 2);

    std::ostringstream out5, err5;
    CHECK(run_cli({"solve"}, out5, err5) == 2);

    std::ostringstream out6, err6;
    CHECK(run_cli({"solve", "x^3 + 2 = 3x^2", "--base", "7"}, out6, err6) == 2);

    std::ostringstream out7, err7;
    CHECK(run_cli({"solve", "x^3 + 2 = 3x^2", "--no-oracle"}, out7, err7) == 0);
    CHECK(out7.str().find("skipped") != std::string::npos);
}

TEST_CASE("cli json format") {
    std::ostringstream out, err;
    int code = run_cli({"solve", "x^3 + 4 = 3x^2", "--format", "json"}, out, err);
    CHECK(code == 0);
    auto j = nlohmann::ordered_json::parse(out.str());
    CHECK(j["case"] == "double_root");
}

TEST_CASE("cli batch mode") {
    std::string path = "batch_test_input.txt";
    {
        std::ofstream f(path);
        f << "# three C21 instances and one bad line\n";
        f << "x^3 + 2 = 3x^2\n";
        f << "x^3 + 4 = 3x^2   # double root\n";
        f << "\n";
        f << "x^3 + 5 = 3x^2\n";
        f << "this is not an equation\n";
    }
    std::ostringstream out, err;
    int code = run_cli({"solve", "--batch", path, "--digits", "6"}, out, err);
    CHECK(code == 0); // parse errors are reported, not fatal
    std::string text = out.str();
    CHECK(text.find("two_roots") != std::string::npos);
    CHECK(text.find("double_root") != std::string::npos);
    CHECK(text.find("impossible") != std::string::npos);
    CHECK(text.find("equations:     4") != std::string::npos);
    CHECK(text.find("parse errors:  1") != std::string::npos);
    CHECK(text.find("oracle agree:  3") != std::string::npos);
    CHECK(err.str().find("line 6") != std::string::npos);
    std::remove(path.c_str());

    // Empty file: empty summary, success.
    {
        std::ofstream f(path);
        f << "# nothing\n";
    }
    std::ostringstream out2, err2;
    CHECK(run_cli({"solve", "--batch", path}, out2, err2) == 0);
    CHECK(out2.str().find("equations:     0") != std::string::npos);
    std::remove(path.c_str());

    std::ostringstream out3, err3;
    CHECK(run_cli({"solve", "--batch", "no_such_file.txt"}, out3, err3) == 2);
}

TEST_CASE("small-root ordering is computation-order independent for C22") {
    // The pipeline is pure; solving twice (and the reversed-extraction check
    // below) must agree with the oracle either way.
    SolveReport a = solve_text("x^3 + 1 = 3*x", opts(10));
    SolveReport b = solve_text("x^3 + 1 = 3*x", opts(10));
    CHECK(a.roots[0].digits.str() == b.roots[0].digits.str());
    CHECK(a.roots[1].digits.str() == b.roots[1].digits.str());
    CHECK(a.roots[0].digits.str().substr(0, 8) == "0.347296");
    CHECK(a.roots[1].digits.enclosure.intersects(b.roots[1].digits.enclosure));
}

TEST_CASE("requested digit counts are honored") {
    for (unsigned n : {1u, 6u, 20u}) {
        SolveReport rep = solve_text("x^3 + 2 = 3x^2", opts(n));
        CHECK(rep.roots[1].digits.frac_digits.size() == n);
        CHECK(rep.roots[1].digits.enclosure.width() <= rep.roots[1].digits.ulp());
    }
}
