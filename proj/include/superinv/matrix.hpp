#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "superinv/rational.hpp"

namespace superinv {

class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols);
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const { return a_; }

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rational& s);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

    Rational trace() const;
    QMatrix transpose() const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) = default;
    // Lexicographic on (rows, cols, entries); only used for canonical ordering.
    friend bool operator<(const QMatrix& a, const QMatrix& b);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Dense univariate polynomial, coefficient k multiplies z^k. Trailing zeros trimmed.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    Rational eval(const Rational& z) const;

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    std::vector<Rational> c_;
};

// det(I - zM); the 0x0 matrix gives 1.
UniPoly charpoly_det(const QMatrix& m);

Rational determinant(const QMatrix& m);
std::size_t matrix_rank(const QMatrix& m);

// Indices of a maximal linearly independent subset of rows, chosen greedily in row order.
std::vector<std::size_t> independent_rows(const QMatrix& m);

}  // namespace superinv
