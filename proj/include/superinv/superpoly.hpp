#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "superinv/matrix.hpp"
#include "superinv/rational.hpp"

namespace superinv {

class Permutation;

// Sym±(V^n) with dim V0 = r0, dim V1 = r1. Rows and columns are 1-based in the public API.
struct AlgebraSignature {
    int r0 = 0, r1 = 0, n = 0;
    int even_vars() const { return r0 * n; }
    int odd_vars() const { return r1 * n; }
    friend bool operator==(const AlgebraSignature&, const AlgebraSignature&) = default;
};

struct Bidegree {
    int i = 0, j = 0;
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// x-exponents stored densely (row-major, r0 per row); theta as strictly increasing flat
// indices (row-1)*r1 + (col-1).
struct SuperMonomial {
    std::vector<std::uint32_t> x;
    std::vector<std::uint32_t> theta;

    Bidegree bidegree() const;
    friend bool operator==(const SuperMonomial&, const SuperMonomial&) = default;
};

// Graded order: bidegree first, then x exponents lexicographically descending, then theta ascending.
struct MonomialOrder {
    bool operator()(const SuperMonomial& a, const SuperMonomial& b) const;
};

struct NormalizedTheta {
    std::vector<std::pair<int, int>> ordered;  // strictly increasing (row, col); empty if zero
    int sign = 1;                              // 0 when a repeated variable kills the product
};

NormalizedTheta normalize_theta(const std::vector<std::pair<int, int>>& raw);

class SuperPolynomial {
public:
    using Terms = std::map<SuperMonomial, Rational, MonomialOrder>;

    explicit SuperPolynomial(AlgebraSignature sig = {});

    static SuperPolynomial constant(AlgebraSignature sig, const Rational& c);
    static SuperPolynomial x(AlgebraSignature sig, int row, int col, unsigned exp = 1);
    static SuperPolynomial theta(AlgebraSignature sig, int row, int col);
    // Product of x powers and a theta word in the written order; the sign of reordering is applied.
    static SuperPolynomial term(AlgebraSignature sig, const Rational& c,
                                const std::vector<std::tuple<int, int, unsigned>>& xs,
                                const std::vector<std::pair<int, int>>& thetas);

    const AlgebraSignature& sig() const { return sig_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const SuperMonomial& m, const Rational& c);

    // Bidegrees present; a homogeneous polynomial has exactly one.
    std::vector<Bidegree> bidegrees() const;

    SuperPolynomial& operator+=(const SuperPolynomial& o);
    SuperPolynomial& operator-=(const SuperPolynomial& o);
    SuperPolynomial& operator*=(const Rational& s);
    friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
    friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
    friend SuperPolynomial operator*(SuperPolynomial a, const Rational& s) { return a *= s; }
    friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) {
        return a.sig_ == b.sig_ && a.terms_ == b.terms_;
    }

private:
    void check(const SuperMonomial& m) const;

    AlgebraSignature sig_;
    Terms terms_;
};

SuperPolynomial super_mul(const SuperPolynomial& a, const SuperPolynomial& b);
inline SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) { return super_mul(a, b); }

// Relabels row i as sigma^{-1}(i), i.e. sigma(x_i) = x_{sigma^{-1}(i)} in one-line notation.
SuperPolynomial apply_row_permutation(const Permutation& sigma, const SuperPolynomial& f);

// Substitutes x_{row,c} -> sum_{c'} g0[c',c] x_{row,c'} and likewise theta with g1.
SuperPolynomial apply_graded_element(const QMatrix& g0, const QMatrix& g1, int row,
                                     const SuperPolynomial& f);

// Re-embeds f into a signature with n rows, moving row i to row i + offset.
SuperPolynomial shift_rows(const SuperPolynomial& f, int offset, int n);

// All monomials of bidegree (i, j) in MonomialOrder.
std::vector<SuperMonomial> bidegree_basis(AlgebraSignature sig, int i, int j);

}  // namespace superinv
