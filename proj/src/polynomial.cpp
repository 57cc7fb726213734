#include "tusi/polynomial.hpp"

#include "tusi/error.hpp"

namespace tusi {

RatPoly poly_rem(RatPoly a, const RatPoly& b) {
    poly_trim(a);
    int db = poly_degree(b);
    if (db < 0) throw DomainError("polynomial remainder by zero");
    while (poly_degree(a) >= db) {
        int da = poly_degree(a);
        Rational f = a[da] / b[db];
        for (int i = 0; i <= db; ++i) {
            a[da - db + i] -= f * b[i];
        }
        poly_trim(a);
    }
    return a;
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        RatPoly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

RatPoly poly_div_exact(RatPoly a, const RatPoly& b) {
    poly_trim(a);
    int db = poly_degree(b);
    if (db < 0) throw DomainError("polynomial division by zero");
    int da = poly_degree(a);
    if (da < db) {
        if (da < 0) return {};
        throw InternalError("poly_div_exact: degree underflow");
    }
    RatPoly q(static_cast<std::size_t>(da - db) + 1, Rational(0));
    while (poly_degree(a) >= db) {
        int d = poly_degree(a);
        Rational f = a[d] / b[db];
        q[d - db] = f;
        for (int i = 0; i <= db; ++i) {
            a[d - db + i] -= f * b[i];
        }
        poly_trim(a);
    }
    if (!a.empty()) throw InternalError("poly_div_exact: nonzero remainder");
    return q;
}

RatPoly poly_monic(RatPoly p) {
    poly_trim(p);
    if (p.empty()) return p;
    Rational lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

} // namespace tusi
