#pragma once

#include <functional>
#include <map>

#include "superinv/group.hpp"
#include "superinv/partition.hpp"
#include "superinv/series.hpp"

namespace superinv {

// Rational combination of power-sum products p_lambda.
class SymFuncPoly {
public:
    using Terms = std::map<Partition, Rational, std::greater<>>;

    SymFuncPoly() = default;
    static SymFuncPoly constant(const Rational& c);
    static SymFuncPoly p(const Partition& lambda, const Rational& c = Rational(1));
    static SymFuncPoly p(int r) { return p(Partition({r})); }

    const Terms& terms() const { return terms_; }
    Rational coeff(const Partition& lambda) const;
    void add_term(const Partition& lambda, const Rational& c);

    SymFuncPoly& operator+=(const SymFuncPoly& o);
    SymFuncPoly& operator-=(const SymFuncPoly& o);
    SymFuncPoly& operator*=(const Rational& s);
    friend SymFuncPoly operator+(SymFuncPoly a, const SymFuncPoly& b) { return a += b; }
    friend SymFuncPoly operator-(SymFuncPoly a, const SymFuncPoly& b) { return a -= b; }
    friend SymFuncPoly operator*(SymFuncPoly a, const Rational& s) { return a *= s; }
    friend SymFuncPoly operator*(const SymFuncPoly& a, const SymFuncPoly& b);
    friend bool operator==(const SymFuncPoly&, const SymFuncPoly&) = default;

private:
    Terms terms_;
};

SymFuncPoly cycle_index(const PermGroup& p, Flavor flavor = Flavor::invariant);
// Weighted by an explicit ±1 character aligned with p.elements().
SymFuncPoly cycle_index(const PermGroup& p, const std::vector<int>& chi);

// omega(p_r) = (-1)^{r-1} p_r.
SymFuncPoly omega(const SymFuncPoly& f);

// p_r -> s(t^r, q^r, u^r); the result keeps the caps of s.
TrigradedSeries plethystic_substitute(const SymFuncPoly& f, const TrigradedSeries& s);

// f[g]: p_r[g] replaces each p_s in g by p_{rs}.
SymFuncPoly plethystic_compose(const SymFuncPoly& f, const SymFuncPoly& g);

// h_n = Z_{S_n}, e_n = Z^sgn_{S_n}, built from z_lambda.
SymFuncPoly complete_homogeneous(int n);
SymFuncPoly elementary(int n);
Rational z_lambda(const Partition& lambda);

}  // namespace superinv
