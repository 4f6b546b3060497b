#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "superinv/group.hpp"
#include "superinv/matrix.hpp"
#include "superinv/superpoly.hpp"

namespace superinv::testing {

using Rng = std::mt19937_64;

inline Rational random_rational(Rng& rng, int span = 4, int max_den = 3) {
    std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline QMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int span = 3) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = random_rational(rng, span);
    return m;
}

inline Permutation random_permutation(Rng& rng, int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation(v);
}

// Permutation matrix with random signs; generates a finite group.
inline QMatrix random_signed_permutation_matrix(Rng& rng, int n) {
    const Permutation p = random_permutation(rng, n);
    std::bernoulli_distribution flip(0.5);
    QMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int c = 1; c <= n; ++c)
        m(static_cast<std::size_t>(p(c) - 1), static_cast<std::size_t>(c - 1)) = flip(rng) ? -1 : 1;
    return m;
}

inline SuperPolynomial random_poly(Rng& rng, AlgebraSignature sig, int terms, unsigned max_exp = 2) {
    std::uniform_int_distribution<int> row(1, sig.n), ecol(1, std::max(sig.r0, 1)), ocol(1, std::max(sig.r1, 1));
    std::uniform_int_distribution<unsigned> exp(0, max_exp);
    std::uniform_int_distribution<int> nx(0, 2), nth(0, 2);
    SuperPolynomial f(sig);
    for (int k = 0; k < terms; ++k) {
        std::vector<std::tuple<int, int, unsigned>> xs;
        std::vector<std::pair<int, int>> thetas;
        if (sig.r0 > 0)
            for (int a = nx(rng); a > 0; --a)
                xs.emplace_back(row(rng), ecol(rng), exp(rng));
        if (sig.r1 > 0)
            for (int a = nth(rng); a > 0; --a)
                thetas.emplace_back(row(rng), ocol(rng));
        f += SuperPolynomial::term(sig, random_rational(rng), xs, thetas);
    }
    return f;
}

// Bidegree-homogeneous random element: a combination of monomials from one basis.
inline SuperPolynomial random_homogeneous(Rng& rng, AlgebraSignature sig, int i, int j) {
    SuperPolynomial f(sig);
    for (const auto& m : bidegree_basis(sig, i, j))
        f.add_term(m, random_rational(rng));
    return f;
}

}  // namespace superinv::testing
