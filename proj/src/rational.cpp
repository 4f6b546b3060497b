#include "superinv/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "superinv/errors.hpp"

namespace superinv {

Rational::Rational(long num, long den) {
    if (den == 0)
        throw Error(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
        throw Error(ErrorKind::DivisionByZero, "zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

static bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    return true;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    std::string_view p = text.substr(0, slash);
    std::string_view q = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer(p) || !valid_integer(q) || q.front() == '-' || q.front() == '+')
        throw Error(ErrorKind::Parse, "malformed rational '" + std::string(text) + "'");
    std::string ps(p.front() == '+' ? p.substr(1) : p);
    mpz_class num(ps, 10), den(std::string(q), 10);
    return Rational(num, den);
}

std::string Rational::str() const {
    if (is_integer())
        return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw Error(ErrorKind::Domain, "rational " + str() + " is not a machine integer");
    return v_.get_num().get_si();
}

Rational Rational::inverse() const {
    if (is_zero())
        throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw Error(ErrorKind::DivisionByZero, "division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out, mpz_class(1));
}

}  // namespace superinv
