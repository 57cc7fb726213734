#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

#include "tusi/error.hpp"

namespace tusi {

/// Arbitrary-precision rational number, always canonical: the denominator is
/// positive and coprime to the numerator. Backed by GMP.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {} // NOLINT: implicit by design
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(mpz_class n) : v_(std::move(n)) {}
    explicit Rational(mpq_class q);

    // Accepts "n" or "n/m" with optional leading sign.
    static std::optional<Rational> from_string(const std::string& text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b);

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational reciprocal() const;
    Rational pow(unsigned e) const;

    // Largest integer <= value.
    mpz_class floor() const;

    // Exact square root when the value is the square of a rational.
    std::optional<Rational> exact_sqrt() const;

    std::string to_string() const; // "n" or "n/m"
    // Decimal expansion truncated toward zero at `digits` fraction digits.
    std::string to_decimal(std::size_t digits) const;

private:
    mpq_class v_; // mpq arithmetic keeps the canonical form
};

inline Rational abs(const Rational& r) { return r.abs(); }

} // namespace tusi
