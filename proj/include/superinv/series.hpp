#pragma once

#include <compare>
#include <map>
#include <string>

#include "superinv/matrix.hpp"
#include "superinv/rational.hpp"

namespace superinv {

// Truncation caps: coefficients are known exactly for t <= t, q <= q, u <= u.
struct Caps {
    int t = 0, q = 0, u = 0;
    friend bool operator==(const Caps&, const Caps&) = default;
};

Caps min_caps(const Caps& a, const Caps& b);

struct Exponent {
    int t = 0, q = 0, u = 0;
    friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

enum class Var { t, q, u };

// Truncated power series in t, q, u with exact rational coefficients.
// Only nonzero coefficients inside the caps are stored.
class TrigradedSeries {
public:
    using Terms = std::map<Exponent, Rational>;

    explicit TrigradedSeries(Caps caps = {});

    static TrigradedSeries constant(const Rational& c, Caps caps);
    static TrigradedSeries one(Caps caps) { return constant(Rational(1), caps); }
    static TrigradedSeries monomial(const Rational& c, Exponent e, Caps caps);
    // Polynomial p(z) placed in one variable; terms beyond the cap are dropped.
    static TrigradedSeries from_unipoly(const UniPoly& p, Var var, Caps caps);

    const Caps& caps() const { return caps_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool within_caps(const Exponent& e) const;

    Rational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const Rational& c);  // ignored outside the caps

    TrigradedSeries& operator+=(const TrigradedSeries& o);
    TrigradedSeries& operator-=(const TrigradedSeries& o);
    TrigradedSeries& operator*=(const Rational& s);
    friend TrigradedSeries operator+(TrigradedSeries a, const TrigradedSeries& b) { return a += b; }
    friend TrigradedSeries operator-(TrigradedSeries a, const TrigradedSeries& b) { return a -= b; }
    friend TrigradedSeries operator*(TrigradedSeries a, const Rational& s) { return a *= s; }
    friend TrigradedSeries operator*(const TrigradedSeries& a, const TrigradedSeries& b);

    // Equality of coefficients within the componentwise-minimum caps.
    friend bool operator==(const TrigradedSeries& a, const TrigradedSeries& b);

private:
    Caps caps_;
    Terms terms_;
};

TrigradedSeries series_inv(const TrigradedSeries& s);
TrigradedSeries series_pow_int(const TrigradedSeries& s, long k);
// u -> -u.
TrigradedSeries flip_u(const TrigradedSeries& s);
// t -> -t.
TrigradedSeries flip_t(const TrigradedSeries& s);
// (t, q, u) -> (t^r, q^r, u^r), caps unchanged.
TrigradedSeries scale_exponents(const TrigradedSeries& s, int r);
TrigradedSeries truncate(const TrigradedSeries& s, Caps caps);

// Aligned grid per t-degree: rows are q-degree, columns u-degree.
std::string render_table(const TrigradedSeries& s);

}  // namespace superinv
