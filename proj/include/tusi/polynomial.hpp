#pragma once

#include <vector>

#include "tusi/quadext.hpp"
#include "tusi/rational.hpp"

namespace tusi {

// Dense univariate polynomials, coefficients in ascending degree order.
using RatPoly = std::vector<Rational>;
using QEPoly = std::vector<QuadExt>;

inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const QuadExt& c) { return c.is_zero(); }

template <class T>
void poly_trim(std::vector<T>& p) {
    while (!p.empty() && coeff_is_zero(p.back())) p.pop_back();
}

template <class T>
int poly_degree(const std::vector<T>& p) {
    for (std::size_t i = p.size(); i-- > 0;) {
        if (!coeff_is_zero(p[i])) return static_cast<int>(i);
    }
    return -1;
}

template <class T, class X>
T poly_eval(const std::vector<T>& p, const X& x) {
    T acc{};
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
    }
    return acc;
}

template <class T>
std::vector<T> poly_derivative(const std::vector<T>& p) {
    std::vector<T> d;
    for (std::size_t i = 1; i < p.size(); ++i) {
        d.push_back(p[i] * T(static_cast<long>(i)));
    }
    return d;
}

template <class T>
std::vector<T> poly_neg(const std::vector<T>& p) {
    std::vector<T> r = p;
    for (auto& c : r) c = -c;
    return r;
}

/// Coefficients of p(pivot + X) by repeated synthetic division; exact.
template <class T>
std::vector<T> poly_taylor_shift(const std::vector<T>& p, const T& pivot) {
    std::vector<T> r = p;
    if (r.empty()) return r;
    for (std::size_t k = 0; k + 1 < r.size(); ++k) {
        for (std::size_t i = r.size() - 1; i > k; --i) {
            r[i - 1] += r[i] * pivot;
        }
    }
    return r;
}

/// Coefficients of p(-X): odd-degree terms negated.
template <class T>
std::vector<T> poly_reflect(const std::vector<T>& p) {
    std::vector<T> r = p;
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return r;
}

// Remainder of a modulo b over the rationals (b nonzero).
RatPoly poly_rem(RatPoly a, const RatPoly& b);

// Monic gcd over the rationals; the zero polynomial is represented empty.
RatPoly poly_gcd(RatPoly a, RatPoly b);

// Quotient of exact division; throws InternalError when b does not divide a.
RatPoly poly_div_exact(RatPoly a, const RatPoly& b);

RatPoly poly_monic(RatPoly p);

} // namespace tusi
