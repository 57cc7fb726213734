#include "tusi/forms.hpp"

#include <array>
#include <cctype>
#include <sstream>

#include "tusi/error.hpp"

namespace tusi {

int GeneralPoly::degree() const {
    if (!c3.is_zero()) return 3;
    if (!c2.is_zero()) return 2;
    if (!c1.is_zero()) return 1;
    if (!c0.is_zero()) return 0;
    return -1;
}

Rational GeneralPoly::eval(const Rational& x) const {
    return ((c3 * x + c2) * x + c1) * x + c0;
}

std::string_view form_name(Form f) {
    switch (f) {
        case Form::Q7: return "Q7";
        case Form::Q8: return "Q8";
        case Form::C15: return "C15";
        case Form::C21: return "C21";
        case Form::C22: return "C22";
        case Form::C23: return "C23";
        case Form::C24: return "C24";
        case Form::C25: return "C25";
        case Form::OtherCubic: return "other-cubic";
    }
    return "?";
}

std::string form_pattern(Form f) {
    switch (f) {
        case Form::Q7: return "x^2 + b*x = c";
        case Form::Q8: return "y^2 - b*y = c";
        case Form::C15: return "x^3 + a*x^2 = c";
        case Form::C21: return "x^3 + c = a*x^2";
        case Form::C22: return "x^3 + c = b*x";
        case Form::C23: return "x^3 + a*x^2 + c = b*x";
        case Form::C24: return "x^3 + b*x + c = a*x^2";
        case Form::C25: return "x^3 + c = a*x^2 + b*x";
        case Form::OtherCubic: return "monic cubic with a unique sign change";
    }
    return "?";
}

std::string CanonicalEquation::to_string() const {
    auto A = a.to_string(), B = b.to_string(), C = c.to_string();
    switch (form) {
        case Form::Q7: return "x^2 + " + B + "*x = " + C;
        case Form::Q8: return "y^2 - " + B + "*y = " + C;
        case Form::C15: return "x^3 + " + A + "*x^2 = " + C;
        case Form::C21: return "x^3 + " + C + " = " + A + "*x^2";
        case Form::C22: return "x^3 + " + C + " = " + B + "*x";
        case Form::C23: return "x^3 + " + A + "*x^2 + " + C + " = " + B + "*x";
        case Form::C24: return "x^3 + " + B + "*x + " + C + " = " + A + "*x^2";
        case Form::C25: return "x^3 + " + C + " = " + A + "*x^2 + " + B + "*x";
        case Form::OtherCubic: {
            std::ostringstream os;
            os << "x^3";
            if (!monic.c2.is_zero()) os << " + (" << monic.c2.to_string() << ")*x^2";
            if (!monic.c1.is_zero()) os << " + (" << monic.c1.to_string() << ")*x";
            os << " + (" << monic.c0.to_string() << ") = 0";
            return os.str();
        }
    }
    return "?";
}

CanonicalEquation make_canonical(Form f, const Rational& a, const Rational& b,
                                 const Rational& c) {
    auto need_pos = [](const Rational& v, const char* name) {
        if (v.sign() <= 0) {
            throw UsageError(std::string("coefficient ") + name + " must be positive");
        }
    };
    CanonicalEquation eq{f, a, b, c, {}};
    switch (f) {
        case Form::Q7:
            if (b.sign() < 0) throw UsageError("coefficient b must be nonnegative");
            need_pos(c, "c");
            eq.a = Rational(0);
            eq.monic = GeneralPoly{Rational(0), Rational(1), b, -c};
            break;
        case Form::Q8:
            need_pos(b, "b");
            need_pos(c, "c");
            eq.a = Rational(0);
            eq.monic = GeneralPoly{Rational(0), Rational(1), -b, -c};
            break;
        case Form::C15:
            need_pos(a, "a");
            need_pos(c, "c");
            eq.b = Rational(0);
            eq.monic = GeneralPoly{Rational(1), a, Rational(0), -c};
            break;
        case Form::C21:
            need_pos(a, "a");
            need_pos(c, "c");
            eq.b = Rational(0);
            eq.monic = GeneralPoly{Rational(1), -a, Rational(0), c};
            break;
        case Form::C22:
            need_pos(b, "b");
            need_pos(c, "c");
            eq.a = Rational(0);
            eq.monic = GeneralPoly{Rational(1), Rational(0), -b, c};
            break;
        case Form::C23:
            need_pos(a, "a");
            need_pos(b, "b");
            need_pos(c, "c");
            eq.monic = GeneralPoly{Rational(1), a, -b, c};
            break;
        case Form::C24:
            need_pos(a, "a");
            need_pos(b, "b");
            need_pos(c, "c");
            eq.monic = GeneralPoly{Rational(1), -a, b, c};
            break;
        case Form::C25:
            need_pos(a, "a");
            need_pos(b, "b");
            need_pos(c, "c");
            eq.monic = GeneralPoly{Rational(1), -a, -b, c};
            break;
        case Form::OtherCubic:
            throw UsageError("make_canonical does not build other-cubic forms");
    }
    return eq;
}

GeneralPoly expand(const CanonicalEquation& eq) { return eq.monic; }

// ---------------------------------------------------------------------------
// Equation text parsing
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos); }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return mpz_class(std::string(text.substr(start, pos - start)), 10);
    }

    Rational number() {
        mpz_class n = integer();
        skip_ws();
        if (pos < text.size() && text[pos] == '/') {
            ++pos;
            std::size_t dpos = pos;
            mpz_class d = integer();
            if (d == 0) throw ParseError("zero denominator", dpos);
            return Rational(n, d);
        }
        return Rational(std::move(n));
    }

    // One side of the equation into ascending coefficients [c0..c3].
    std::array<Rational, 4> side() {
        std::array<Rational, 4> coef{Rational(0), Rational(0), Rational(0), Rational(0)};
        int sign = 1;
        if (accept('+')) {
            sign = 1;
        } else if (accept('-')) {
            sign = -1;
        }
        for (;;) {
            term(coef, sign);
            if (accept('+')) {
                sign = 1;
            } else if (accept('-')) {
                sign = -1;
            } else {
                break;
            }
        }
        return coef;
    }

    void term(std::array<Rational, 4>& coef, int sign) {
        Rational k(1);
        bool have_coef = false;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            k = number();
            have_coef = true;
            accept('*');
        }
        int deg = 0;
        if (accept('x')) {
            deg = 1;
            if (accept('^')) {
                std::size_t epos = pos;
                mpz_class e = integer();
                if (e > 3) throw ParseError("degree above 3 is not supported", epos);
                if (e < 1) throw ParseError("exponent must be between 1 and 3", epos);
                deg = static_cast<int>(e.get_si());
            }
        } else if (!have_coef) {
            fail("expected a term");
        }
        if (sign < 0) k = -k;
        coef[static_cast<std::size_t>(deg)] += k;
    }
};

} // namespace

GeneralPoly parse_equation(std::string_view text) {
    Parser p{text};
    auto lhs = p.side();
    p.skip_ws();
    if (!p.accept('=')) p.fail("expected '='");
    auto rhs = p.side();
    if (!p.at_end()) p.fail("unexpected trailing input");

    GeneralPoly g{lhs[3] - rhs[3], lhs[2] - rhs[2], lhs[1] - rhs[1], lhs[0] - rhs[0]};
    if (g.degree() < 0) throw ParseError("zero polynomial: every term cancels", 0);
    return g;
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

namespace {

Classified classify_monic(const GeneralPoly& m, int zero_roots);

// Quadratic x^2 + p x + q = 0 with q != 0.
Classified classify_quadratic(const Rational& p, const Rational& q, int zero_roots) {
    Classified out;
    out.zero_roots = zero_roots;
    GeneralPoly monic{Rational(0), Rational(1), p, q};
    if (q.sign() < 0) {
        if (p.sign() >= 0) {
            out.equation = CanonicalEquation{Form::Q7, Rational(0), p, -q, monic};
        } else {
            out.equation = CanonicalEquation{Form::Q8, Rational(0), -p, -q, monic};
        }
        return out;
    }
    // q > 0
    if (p.sign() >= 0) {
        out.terminal = Classified::Terminal::ImpossibleBySigns;
        return out;
    }
    throw UnsupportedFormError(
        "the arrangement x^2 + c = b*x is outside the supported catalogue");
}

// Cubic x^3 + p x^2 + q x + r = 0 with r != 0.
Classified classify_cubic(const Rational& p, const Rational& q, const Rational& r,
                          int zero_roots) {
    Classified out;
    out.zero_roots = zero_roots;
    GeneralPoly monic{Rational(1), p, q, r};
    int sp = p.sign(), sq = q.sign(), sr = r.sign();
    if (sr > 0) {
        if (sp >= 0 && sq >= 0) {
            out.terminal = Classified::Terminal::ImpossibleBySigns;
            return out;
        }
        Form f;
        Rational a(0), b(0);
        if (sp < 0 && sq == 0) {
            f = Form::C21; a = -p;
        } else if (sp == 0 && sq < 0) {
            f = Form::C22; b = -q;
        } else if (sp > 0 && sq < 0) {
            f = Form::C23; a = p; b = -q;
        } else if (sp < 0 && sq > 0) {
            f = Form::C24; a = -p; b = q;
        } else { // sp < 0 && sq < 0
            f = Form::C25; a = -p; b = -q;
        }
        out.equation = CanonicalEquation{f, a, b, r, monic};
        return out;
    }
    // r < 0: the constant lands opposite x^3 with positive sign.
    if (sp > 0 && sq == 0) {
        out.equation = CanonicalEquation{Form::C15, p, Rational(0), -r, monic};
        return out;
    }
    out.equation = CanonicalEquation{Form::OtherCubic, Rational(0), Rational(0),
                                     Rational(0), monic};
    return out;
}

Classified classify_monic(const GeneralPoly& m, int zero_roots) {
    switch (m.degree()) {
        case 3:
            if (m.c0.is_zero()) {
                return classify_monic(GeneralPoly{Rational(0), m.c3, m.c2, m.c1},
                                      zero_roots + 1);
            }
            return classify_cubic(m.c2 / m.c3, m.c1 / m.c3, m.c0 / m.c3, zero_roots);
        case 2:
            if (m.c0.is_zero()) {
                return classify_monic(GeneralPoly{Rational(0), Rational(0), m.c2, m.c1},
                                      zero_roots + 1);
            }
            return classify_quadratic(m.c1 / m.c2, m.c0 / m.c2, zero_roots);
        case 1: {
            if (m.c0.is_zero()) {
                Classified out;
                out.zero_roots = zero_roots + 1;
                out.terminal = Classified::Terminal::ImpossibleBySigns;
                return out;
            }
            Classified out;
            out.zero_roots = zero_roots;
            out.terminal = Classified::Terminal::LinearRoot;
            out.linear_root = -(m.c0 / m.c1);
            return out;
        }
        case 0: {
            Classified out;
            out.zero_roots = zero_roots;
            out.terminal = Classified::Terminal::ImpossibleBySigns;
            return out;
        }
        default:
            throw DomainError("cannot classify the zero polynomial");
    }
}

} // namespace

Classified classify(const GeneralPoly& p) { return classify_monic(p, 0); }

// ---------------------------------------------------------------------------
// Target function
// ---------------------------------------------------------------------------

TargetFunction target_function(const CanonicalEquation& eq) {
    switch (eq.form) {
        case Form::C21: return {eq.form, eq.a, Rational(0), eq.c};
        case Form::C22: return {eq.form, Rational(0), eq.b, eq.c};
        case Form::C23: return {eq.form, -eq.a, eq.b, eq.c};
        case Form::C24: return {eq.form, eq.a, -eq.b, eq.c};
        case Form::C25: return {eq.form, eq.a, eq.b, eq.c};
        default:
            throw UsageError("target_function applies to the conditionally solvable cubics only");
    }
}

Rational target_eval(const TargetFunction& tf, const Rational& x) {
    return ((-x + tf.alpha) * x + tf.beta) * x;
}

QuadExt target_eval(const TargetFunction& tf, const QuadExt& x) {
    return ((-x + QuadExt(tf.alpha)) * x + QuadExt(tf.beta)) * x;
}

RatPoly target_poly(const TargetFunction& tf) {
    return {Rational(0), tf.beta, tf.alpha, Rational(-1)};
}

} // namespace tusi
