#include "superinv/superpoly.hpp"

#include <algorithm>
#include <numeric>

#include "superinv/errors.hpp"
#include "superinv/permutation.hpp"

namespace superinv {

namespace {

// Stable merge sort; returns the number of inversions removed.
long sort_count(std::vector<std::uint32_t>& v, std::vector<std::uint32_t>& tmp, std::size_t lo, std::size_t hi) {
    if (hi - lo < 2)
        return 0;
    std::size_t mid = lo + (hi - lo) / 2;
    long inv = sort_count(v, tmp, lo, mid) + sort_count(v, tmp, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (v[j] < v[i]) {
            inv += static_cast<long>(mid - i);
            tmp[k++] = v[j++];
        } else {
            tmp[k++] = v[i++];
        }
    }
    while (i < mid)
        tmp[k++] = v[i++];
    while (j < hi)
        tmp[k++] = v[j++];
    std::copy(tmp.begin() + static_cast<long>(lo), tmp.begin() + static_cast<long>(hi), v.begin() + static_cast<long>(lo));
    return inv;
}

// Sorts a word of odd variables in place; returns its sign, 0 if a variable repeats.
int normalize_word(std::vector<std::uint32_t>& w) {
    std::vector<std::uint32_t> tmp(w.size());
    long inv = sort_count(w, tmp, 0, w.size());
    if (std::adjacent_find(w.begin(), w.end()) != w.end())
        return 0;
    return inv % 2 ? -1 : 1;
}

void require(bool ok, ErrorKind kind, const char* what) {
    if (!ok)
        throw Error(kind, what);
}

}  // namespace

Bidegree SuperMonomial::bidegree() const {
    long i = std::accumulate(x.begin(), x.end(), 0L);
    return {static_cast<int>(i), static_cast<int>(theta.size())};
}

bool MonomialOrder::operator()(const SuperMonomial& a, const SuperMonomial& b) const {
    Bidegree da = a.bidegree(), db = b.bidegree();
    if (da != db)
        return da < db;
    if (a.x != b.x)
        return a.x > b.x;
    return a.theta < b.theta;
}

NormalizedTheta normalize_theta(const std::vector<std::pair<int, int>>& raw) {
    // Encode (row, col) order-preservingly into a single key.
    int maxcol = 1;
    for (const auto& [r, c] : raw) {
        require(r >= 1 && c >= 1, ErrorKind::Domain, "theta indices are 1-based");
        maxcol = std::max(maxcol, c);
    }
    std::vector<std::uint32_t> w;
    w.reserve(raw.size());
    for (const auto& [r, c] : raw)
        w.push_back(static_cast<std::uint32_t>((r - 1) * maxcol + (c - 1)));
    NormalizedTheta out;
    out.sign = normalize_word(w);
    if (out.sign == 0)
        return out;
    for (auto k : w)
        out.ordered.emplace_back(static_cast<int>(k) / maxcol + 1, static_cast<int>(k) % maxcol + 1);
    return out;
}

SuperPolynomial::SuperPolynomial(AlgebraSignature sig) : sig_(sig) {
    require(sig.r0 >= 0 && sig.r1 >= 0 && sig.n >= 0, ErrorKind::Domain, "negative signature");
}

SuperPolynomial SuperPolynomial::constant(AlgebraSignature sig, const Rational& c) {
    SuperPolynomial p(sig);
    SuperMonomial one;
    one.x.assign(static_cast<std::size_t>(sig.even_vars()), 0);
    p.add_term(one, c);
    return p;
}

SuperPolynomial SuperPolynomial::x(AlgebraSignature sig, int row, int col, unsigned exp) {
    return term(sig, Rational(1), {{row, col, exp}}, {});
}

SuperPolynomial SuperPolynomial::theta(AlgebraSignature sig, int row, int col) {
    return term(sig, Rational(1), {}, {{row, col}});
}

SuperPolynomial SuperPolynomial::term(AlgebraSignature sig, const Rational& c,
                                      const std::vector<std::tuple<int, int, unsigned>>& xs,
                                      const std::vector<std::pair<int, int>>& thetas) {
    SuperMonomial m;
    m.x.assign(static_cast<std::size_t>(sig.even_vars()), 0);
    for (const auto& [row, col, e] : xs) {
        require(row >= 1 && row <= sig.n && col >= 1 && col <= sig.r0, ErrorKind::DimensionMismatch,
                "x index outside signature");
        m.x[static_cast<std::size_t>((row - 1) * sig.r0 + col - 1)] += e;
    }
    for (const auto& [row, col] : thetas) {
        require(row >= 1 && row <= sig.n && col >= 1 && col <= sig.r1, ErrorKind::DimensionMismatch,
                "theta index outside signature");
        m.theta.push_back(static_cast<std::uint32_t>((row - 1) * sig.r1 + col - 1));
    }
    int s = normalize_word(m.theta);
    SuperPolynomial p(sig);
    if (s != 0)
        p.add_term(m, s > 0 ? c : -c);
    return p;
}

void SuperPolynomial::check(const SuperMonomial& m) const {
    require(m.x.size() == static_cast<std::size_t>(sig_.even_vars()), ErrorKind::SignatureMismatch,
            "monomial x-length does not match signature");
    for (std::size_t k = 0; k < m.theta.size(); ++k) {
        require(m.theta[k] < static_cast<std::uint32_t>(sig_.odd_vars()), ErrorKind::SignatureMismatch,
                "theta index outside signature");
        require(k == 0 || m.theta[k - 1] < m.theta[k], ErrorKind::Domain, "theta word not normalized");
    }
}

void SuperPolynomial::add_term(const SuperMonomial& m, const Rational& c) {
    if (c.is_zero())
        return;
    check(m);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

std::vector<Bidegree> SuperPolynomial::bidegrees() const {
    std::vector<Bidegree> out;
    for (const auto& kv : terms_) {
        Bidegree d = kv.first.bidegree();
        if (out.empty() || out.back() != d)
            out.push_back(d);
    }
    return out;  // terms are ordered by bidegree first
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
    require(sig_ == o.sig_, ErrorKind::SignatureMismatch, "sum of different signatures");
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
    require(sig_ == o.sig_, ErrorKind::SignatureMismatch, "difference of different signatures");
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

SuperPolynomial& SuperPolynomial::operator*=(const Rational& s) {
    if (s.is_zero())
        terms_.clear();
    for (auto& kv : terms_)
        kv.second *= s;
    return *this;
}

SuperPolynomial super_mul(const SuperPolynomial& a, const SuperPolynomial& b) {
    require(a.sig() == b.sig(), ErrorKind::SignatureMismatch, "product of different signatures");
    SuperPolynomial out(a.sig());
    SuperMonomial m;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            // Merge the theta words counting pairs (p in a, q in b) with p > q.
            m.theta.clear();
            long swaps = 0;
            bool dead = false;
            std::size_t i = 0, j = 0;
            while (i < ma.theta.size() && j < mb.theta.size()) {
                if (ma.theta[i] == mb.theta[j]) {
                    dead = true;
                    break;
                }
                if (mb.theta[j] < ma.theta[i]) {
                    swaps += static_cast<long>(ma.theta.size() - i);
                    m.theta.push_back(mb.theta[j++]);
                } else {
                    m.theta.push_back(ma.theta[i++]);
                }
            }
            if (dead)
                continue;
            m.theta.insert(m.theta.end(), ma.theta.begin() + static_cast<long>(i), ma.theta.end());
            m.theta.insert(m.theta.end(), mb.theta.begin() + static_cast<long>(j), mb.theta.end());
            m.x = ma.x;
            for (std::size_t k = 0; k < m.x.size(); ++k)
                m.x[k] += mb.x[k];
            Rational c = ca * cb;
            out.add_term(m, swaps % 2 ? -c : c);
        }
    }
    return out;
}

SuperPolynomial apply_row_permutation(const Permutation& sigma, const SuperPolynomial& f) {
    const AlgebraSignature sig = f.sig();
    require(sigma.degree() == sig.n, ErrorKind::DegreeMismatch, "permutation degree differs from row count");
    const Permutation inv = sigma.inverse();
    const auto r0 = static_cast<std::size_t>(sig.r0);
    const auto r1 = static_cast<std::uint32_t>(sig.r1);
    SuperPolynomial out(sig);
    SuperMonomial m;
    for (const auto& [src, c] : f.terms()) {
        m.x.assign(src.x.size(), 0);
        for (int row = 1; row <= sig.n; ++row) {
            auto from = static_cast<std::size_t>(row - 1) * r0;
            auto to = static_cast<std::size_t>(inv(row) - 1) * r0;
            std::copy_n(src.x.begin() + static_cast<long>(from), r0, m.x.begin() + static_cast<long>(to));
        }
        m.theta.clear();
        for (auto k : src.theta) {
            std::uint32_t row = k / r1, col = k % r1;
            m.theta.push_back(static_cast<std::uint32_t>(inv(static_cast<int>(row) + 1) - 1) * r1 + col);
        }
        int s = normalize_word(m.theta);
        out.add_term(m, s > 0 ? c : -c);
    }
    return out;
}

namespace {

// A matrix with exactly one nonzero entry per column.
bool is_monomial_matrix(const QMatrix& g) {
    for (std::size_t c = 0; c < g.cols(); ++c) {
        int nz = 0;
        for (std::size_t r = 0; r < g.rows(); ++r)
            nz += !g(r, c).is_zero();
        if (nz != 1)
            return false;
    }
    return true;
}

std::size_t nonzero_row(const QMatrix& g, std::size_t c) {
    for (std::size_t r = 0; r < g.rows(); ++r)
        if (!g(r, c).is_zero())
            return r;
    return 0;
}

Rational rpow(const Rational& b, unsigned e) {
    Rational out(1);
    for (unsigned k = 0; k < e; ++k)
        out *= b;
    return out;
}

}  // namespace

SuperPolynomial apply_graded_element(const QMatrix& g0, const QMatrix& g1, int row, const SuperPolynomial& f) {
    const AlgebraSignature sig = f.sig();
    require(g0.rows() == static_cast<std::size_t>(sig.r0) && g0.cols() == static_cast<std::size_t>(sig.r0) &&
                g1.rows() == static_cast<std::size_t>(sig.r1) && g1.cols() == static_cast<std::size_t>(sig.r1),
            ErrorKind::DimensionMismatch, "graded element does not match (r0, r1)");
    require(row >= 1 && row <= sig.n, ErrorKind::DimensionMismatch, "row outside signature");
    const auto r0 = static_cast<std::size_t>(sig.r0);
    const auto r1 = static_cast<std::uint32_t>(sig.r1);
    const std::size_t xbase = static_cast<std::size_t>(row - 1) * r0;
    const std::uint32_t tbase = static_cast<std::uint32_t>(row - 1) * r1;
    SuperPolynomial out(sig);

    if (is_monomial_matrix(g0) && is_monomial_matrix(g1)) {
        SuperMonomial m;
        for (const auto& [src, c0] : f.terms()) {
            Rational c = c0;
            m.x = src.x;
            for (std::size_t col = 0; col < r0; ++col)
                m.x[xbase + col] = 0;
            for (std::size_t col = 0; col < r0; ++col) {
                unsigned e = src.x[xbase + col];
                if (e == 0)
                    continue;
                std::size_t to = nonzero_row(g0, col);
                m.x[xbase + to] += e;
                c *= rpow(g0(to, col), e);
            }
            m.theta = src.theta;
            for (auto& k : m.theta) {
                if (k < tbase || k >= tbase + r1)
                    continue;
                std::size_t to = nonzero_row(g1, k - tbase);
                c *= g1(to, k - tbase);
                k = tbase + static_cast<std::uint32_t>(to);
            }
            int s = normalize_word(m.theta);
            if (s != 0)
                out.add_term(m, s > 0 ? c : -c);
        }
        return out;
    }

    // General substitution: rebuild each term as an ordered product of linear forms.
    std::vector<SuperPolynomial> xform(r0, SuperPolynomial(sig)), tform(r1, SuperPolynomial(sig));
    for (std::size_t col = 0; col < r0; ++col)
        for (std::size_t to = 0; to < r0; ++to)
            if (!g0(to, col).is_zero())
                xform[col] += SuperPolynomial::x(sig, row, static_cast<int>(to) + 1) * g0(to, col);
    for (std::size_t col = 0; col < r1; ++col)
        for (std::size_t to = 0; to < r1; ++to)
            if (!g1(to, col).is_zero())
                tform[col] += SuperPolynomial::theta(sig, row, static_cast<int>(to) + 1) * g1(to, col);
    for (const auto& [src, c] : f.terms()) {
        SuperMonomial rest;
        rest.x = src.x;
        for (std::size_t col = 0; col < r0; ++col)
            rest.x[xbase + col] = 0;
        SuperPolynomial acc(sig);
        acc.add_term(rest, c);
        for (std::size_t col = 0; col < r0; ++col)
            for (unsigned e = 0; e < src.x[xbase + col]; ++e)
                acc = acc * xform[col];
        for (auto k : src.theta) {
            if (k >= tbase && k < tbase + r1) {
                acc = acc * tform[k - tbase];
            } else {
                SuperMonomial single;
                single.x.assign(src.x.size(), 0);
                single.theta = {k};
                SuperPolynomial v(sig);
                v.add_term(single, Rational(1));
                acc = acc * v;
            }
        }
        out += acc;
    }
    return out;
}

SuperPolynomial shift_rows(const SuperPolynomial& f, int offset, int n) {
    const AlgebraSignature from = f.sig();
    require(offset >= 0 && offset + from.n <= n, ErrorKind::DimensionMismatch, "row shift out of range");
    const AlgebraSignature to{from.r0, from.r1, n};
    SuperPolynomial out(to);
    SuperMonomial m;
    for (const auto& [src, c] : f.terms()) {
        m.x.assign(static_cast<std::size_t>(to.even_vars()), 0);
        std::copy(src.x.begin(), src.x.end(), m.x.begin() + static_cast<long>(offset) * from.r0);
        m.theta = src.theta;
        for (auto& k : m.theta)
            k += static_cast<std::uint32_t>(offset * from.r1);
        out.add_term(m, c);
    }
    return out;
}

namespace {

// Exponent vectors of total degree `left` over slots [k, end), in descending lex order.
void compositions(std::vector<std::uint32_t>& cur, std::size_t k, unsigned left,
                  std::vector<std::vector<std::uint32_t>>& out) {
    if (k + 1 >= cur.size()) {
        if (cur.empty()) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        cur[k] = left;
        out.push_back(cur);
        return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
        cur[k] = e;
        compositions(cur, k + 1, left - e, out);
    }
    cur[k] = 0;
}

void subsets(std::uint32_t n, std::uint32_t j, std::uint32_t start, std::vector<std::uint32_t>& cur,
             std::vector<std::vector<std::uint32_t>>& out) {
    if (cur.size() == j) {
        out.push_back(cur);
        return;
    }
    for (std::uint32_t v = start; v + (j - static_cast<std::uint32_t>(cur.size())) <= n; ++v) {
        cur.push_back(v);
        subsets(n, j, v + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<SuperMonomial> bidegree_basis(AlgebraSignature sig, int i, int j) {
    std::vector<SuperMonomial> out;
    if (i < 0 || j < 0 || j > sig.odd_vars())
        return out;
    std::vector<std::vector<std::uint32_t>> xs, ts;
    std::vector<std::uint32_t> cur(static_cast<std::size_t>(sig.even_vars()), 0);
    compositions(cur, 0, static_cast<unsigned>(i), xs);
    std::vector<std::uint32_t> tcur;
    subsets(static_cast<std::uint32_t>(sig.odd_vars()), static_cast<std::uint32_t>(j), 0, tcur, ts);
    for (const auto& x : xs)
        for (const auto& t : ts)
            out.push_back({x, t});
    return out;
}

}  // namespace superinv
