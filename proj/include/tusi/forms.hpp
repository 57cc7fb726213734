#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "tusi/polynomial.hpp"
#include "tusi/quadext.hpp"
#include "tusi/rational.hpp"

namespace tusi {

/// General polynomial equation c3*x^3 + c2*x^2 + c1*x + c0 = 0.
struct GeneralPoly {
    Rational c3, c2, c1, c0;

    int degree() const;
    RatPoly coeffs() const { return {c0, c1, c2, c3}; } // ascending
    Rational eval(const Rational& x) const;
    friend bool operator==(const GeneralPoly&, const GeneralPoly&) = default;
};

/// Canonical positive-coefficient arrangements. Quadratics Q7 (x^2 + bx = c)
/// and Q8 (y^2 - by = c); the always-solvable cubic C15 (x^3 + ax^2 = c); the
/// five conditionally solvable cubics
///   C21: x^3 + c = ax^2        C22: x^3 + c = bx
///   C23: x^3 + ax^2 + c = bx   C24: x^3 + bx + c = ax^2
///   C25: x^3 + c = ax^2 + bx
/// and OtherCubic for every remaining monic arrangement with c != 0.
enum class Form { Q7, Q8, C15, C21, C22, C23, C24, C25, OtherCubic };

std::string_view form_name(Form f);
std::string form_pattern(Form f); // e.g. "x^3 + c = a*x^2"

struct CanonicalEquation {
    Form form;
    Rational a, b, c;  // per-form subset, all stored values > 0 (or unused 0)
    GeneralPoly monic; // the monic "= 0" arrangement, kept for oracle use

    std::string to_string() const; // coefficients substituted into the pattern
};

/// Construct a canonical equation from form + coefficients (validates signs).
CanonicalEquation make_canonical(Form f, const Rational& a, const Rational& b,
                                 const Rational& c);

/// Monic "= 0" polynomial of a canonical equation.
GeneralPoly expand(const CanonicalEquation& eq);

/// Parse an equation string: integers or fractions n/m, variable x, operators
/// + - * ^ =, exponents 1..3, '*' optional, whitespace insignificant.
GeneralPoly parse_equation(std::string_view text);

struct Classified {
    enum class Terminal {
        Equation,          // `equation` holds a canonical form
        ImpossibleBySigns, // every term positive on x > 0; no positive root
        LinearRoot,        // residual linear factor after removing x = 0 roots
    };

    Terminal terminal = Terminal::Equation;
    int zero_roots = 0; // multiplicity of the factored-out root x = 0
    std::optional<CanonicalEquation> equation;
    Rational linear_root; // for Terminal::LinearRoot (sign unrestricted)
};

/// Normalize monic and route by coefficient signs. Roots at the origin are
/// factored out and the quotient reclassified. Throws UnsupportedFormError
/// for the quadratic arrangement x^2 + c = b*x, which sits outside the
/// catalogue.
Classified classify(const GeneralPoly& p);

/// f(x) = -x^3 + alpha*x^2 + beta*x with the equation read as f(x) = c.
struct TargetFunction {
    Form form; // one of C21..C25
    Rational alpha, beta, c;
};

/// Rewrite of a conditionally solvable cubic as f(x) = c. Usage error for
/// any form outside C21..C25.
TargetFunction target_function(const CanonicalEquation& eq);

Rational target_eval(const TargetFunction& tf, const Rational& x);
QuadExt target_eval(const TargetFunction& tf, const QuadExt& x);

/// Coefficients of f as a polynomial: [0, beta, alpha, -1].
RatPoly target_poly(const TargetFunction& tf);

} // namespace tusi
