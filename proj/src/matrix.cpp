#include "superinv/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "superinv/errors.hpp"

namespace superinv {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols)
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] += o.a_[k];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix difference shape");
    for (std::size_t k = 0; k < a_.size(); ++k)
        a_[k] -= o.a_[k];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
    for (auto& x : a_)
        x *= s;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_)
        throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += x * b(k, j);
        }
    return out;
}

Rational QMatrix::trace() const {
    if (!is_square())
        throw Error(ErrorKind::NotSquare, "trace");
    Rational t;
    for (std::size_t i = 0; i < rows_; ++i)
        t += (*this)(i, i);
    return t;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool operator<(const QMatrix& a, const QMatrix& b) {
    if (a.rows_ != b.rows_)
        return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_)
        return a.cols_ < b.cols_;
    return a.a_ < b.a_;
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

Rational UniPoly::eval(const Rational& z) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.c_.empty() || b.c_.empty())
        return UniPoly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(out));
}

// Faddeev-LeVerrier: det(lambda I - M) = sum_k c_k lambda^{n-k}, hence det(I - zM) = sum_k c_k z^k.
UniPoly charpoly_det(const QMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorKind::NotSquare, "charpoly of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[0] = 1;
    QMatrix mk(n, n);  // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        QMatrix next = m * mk;
        for (std::size_t i = 0; i < n; ++i)
            next(i, i) += c[k - 1];
        mk = std::move(next);
        c[k] = -(m * mk).trace() / Rational(static_cast<long>(k));
    }
    return UniPoly(std::move(c));
}

namespace {

using IntRows = std::vector<std::vector<mpz_class>>;

// Scales each row by the lcm of its denominators. Returns the product of the scale factors.
mpz_class to_integer_rows(const QMatrix& m, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols, IntRows& out) {
    mpz_class scale = 1;
    out.assign(rows.size(), std::vector<mpz_class>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        mpz_class l = 1;
        for (std::size_t c : cols)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(rows[i], c).raw().get_den_mpz_t());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const mpq_class& x = m(rows[i], cols[j]).raw();
            out[i][j] = x.get_num() * (l / x.get_den());
        }
        scale *= l;
    }
    return scale;
}

// Fraction-free elimination to echelon form. Returns rank; `swaps` counts row exchanges,
// `last_pivot` holds the final pivot (the determinant up to sign for full-rank square input).
std::size_t bareiss(IntRows& a, std::size_t ncols, int& swaps, mpz_class& last_pivot) {
    const std::size_t nrows = a.size();
    mpz_class prev = 1;
    std::size_t r = 0;
    swaps = 0;
    last_pivot = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c] == 0)
            ++p;
        if (p == nrows)
            continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            ++swaps;
        }
        const mpz_class piv = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const mpz_class lead = a[i][c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                mpz_class v = piv * a[i][j] - lead * a[r][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(v);
            }
            a[i][c] = 0;
        }
        prev = piv;
        last_pivot = piv;
        ++r;
    }
    return r;
}

struct Block {
    std::vector<std::size_t> rows, cols;
};

// Connected components of the bipartite row/column support graph; zero rows are dropped.
std::vector<Block> support_blocks(const QMatrix& m) {
    std::vector<std::size_t> parent(m.cols());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<long> first_col(m.rows(), -1);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) {
                if (first_col[i] < 0)
                    first_col[i] = static_cast<long>(j);
                else
                    parent[find(j)] = find(static_cast<std::size_t>(first_col[i]));
            }
    std::vector<long> block_of(m.cols(), -1);
    std::vector<Block> blocks;
    auto block_index = [&](std::size_t col) {
        std::size_t root = find(col);
        if (block_of[root] < 0) {
            block_of[root] = static_cast<long>(blocks.size());
            blocks.emplace_back();
        }
        return static_cast<std::size_t>(block_of[root]);
    };
    for (std::size_t j = 0; j < m.cols(); ++j)
        blocks[block_index(j)].cols.push_back(j);
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (first_col[i] >= 0)
            blocks[block_index(static_cast<std::size_t>(first_col[i]))].rows.push_back(i);
    return blocks;
}

}  // namespace

Rational determinant(const QMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorKind::NotSquare, "determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return Rational(1);
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    IntRows a;
    mpz_class scale = to_integer_rows(m, idx, idx, a);
    int swaps = 0;
    mpz_class last;
    if (bareiss(a, n, swaps, last) < n)
        return Rational(0);
    if (swaps % 2)
        last = -last;
    return Rational(last, scale);
}

std::size_t matrix_rank(const QMatrix& m) {
    std::size_t rank = 0;
    for (const Block& b : support_blocks(m)) {
        if (b.rows.empty())
            continue;
        IntRows a;
        to_integer_rows(m, b.rows, b.cols, a);
        int swaps = 0;
        mpz_class last;
        rank += bareiss(a, b.cols.size(), swaps, last);
    }
    return rank;
}

std::vector<std::size_t> independent_rows(const QMatrix& m) {
    std::vector<std::size_t> keep;
    for (const Block& b : support_blocks(m)) {
        // Greedy rational elimination: reduced pivot rows with unit pivots.
        std::vector<std::vector<Rational>> basis;
        std::vector<std::size_t> pivots;
        for (std::size_t r : b.rows) {
            std::vector<Rational> v(b.cols.size());
            for (std::size_t j = 0; j < b.cols.size(); ++j)
                v[j] = m(r, b.cols[j]);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (v[pivots[k]].is_zero())
                    continue;
                Rational f = v[pivots[k]];
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (!basis[k][j].is_zero())
                        v[j] -= f * basis[k][j];
            }
            auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
            if (nz == v.end())
                continue;
            std::size_t p = static_cast<std::size_t>(nz - v.begin());
            Rational inv = v[p].inverse();
            for (auto& x : v)
                x *= inv;
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (basis[k][p].is_zero())
                    continue;
                Rational f = basis[k][p];
                for (std::size_t j = 0; j < v.size(); ++j)
                    if (!v[j].is_zero())
                        basis[k][j] -= f * v[j];
            }
            basis.push_back(std::move(v));
            pivots.push_back(p);
            keep.push_back(r);
        }
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

}  // namespace superinv
