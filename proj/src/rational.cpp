#include "tusi/rational.hpp"

#include <sstream>

namespace tusi {

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    v_.canonicalize();
}

std::optional<Rational> Rational::from_string(const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) return std::nullopt;
    if (q.get_den() == 0) return std::nullopt;
    q.canonicalize();
    return Rational(std::move(q));
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("reciprocal of zero");
    return Rational(den(), num());
}

Rational Rational::pow(unsigned e) const {
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
    return Rational(n, d);
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
    return q;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (mpz_perfect_square_p(num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den().get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn = sqrt(num());
    mpz_class sd = sqrt(den());
    return Rational(sn, sd);
}

std::string Rational::to_string() const {
    std::ostringstream os;
    os << num();
    if (!is_integer()) os << "/" << den();
    return os.str();
}

std::string Rational::to_decimal(std::size_t digits) const {
    // |v| * 10^digits, truncated toward zero.
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled;
    mpz_class absnum = ::abs(num());
    mpz_tdiv_q(scaled.get_mpz_t(), mpz_class(absnum * scale).get_mpz_t(),
               den().get_mpz_t());
    mpz_class ip = scaled / scale;
    mpz_class fp = scaled % scale;
    std::ostringstream os;
    if (sign() < 0) os << "-";
    os << ip;
    if (digits > 0) {
        std::string frac = fp.get_str();
        os << "." << std::string(digits - frac.size(), '0') << frac;
    }
    return os.str();
}

} // namespace tusi
