#include "superinv/wreath_series.hpp"

#include "superinv/errors.hpp"
#include "superinv/symfunc.hpp"

namespace superinv {

TrigradedSeries wreath_hilbert_direct(const PermGroup& p, const MatrixGroup& g, int n, Flavor flavor, int dq,
                                      std::optional<int> du) {
    const auto action = GroupAction::of_wreath(p, g, n, flavor);
    return super_molien(action, dq, du.value_or(n * g.r1()));
}

TrigradedSeries wreath_hilbert_plethysm(const PermGroup& p, const MatrixGroup& g, int n, Flavor flavor, int dq,
                                        std::optional<int> du) {
    if (p.degree() != n)
        throw Error(ErrorKind::DegreeMismatch, "permutation group degree differs from n");
    // The G series is a polynomial in u of degree r1, so raising its u-cap adds only true zeros.
    const TrigradedSeries h = super_molien(GroupAction::of_group(g), dq, du.value_or(n * g.r1()));
    return flip_u(plethystic_substitute(cycle_index(p, flavor), flip_u(h)));
}

Caps CollationSpec::caps() const { return {N, dq, du < 0 ? N * group.r1() : du}; }

TrigradedSeries collated_sum_series(const CollationSpec& spec) {
    const Caps caps = spec.caps();
    TrigradedSeries out = TrigradedSeries::one(caps);
    for (int n = 1; n <= spec.N; ++n) {
        TrigradedSeries h = wreath_hilbert_direct(symmetric_group(n), spec.group, n, spec.flavor, caps.q, caps.u);
        for (const auto& [e, c] : h.terms())
            out.add_term({n, e.q, e.u}, c);
    }
    return out;
}

TrigradedSeries collated_product_from_dims(const std::function<long(int, int)>& a, int max_j, Flavor flavor,
                                           Caps caps) {
    TrigradedSeries out = TrigradedSeries::one(caps);
    for (int i = 0; i <= caps.q; ++i)
        for (int j = 0; j <= std::min(max_j, caps.u); ++j) {
            const long mult = a(i, j);
            if (mult == 0)
                continue;
            // Numerator factors (1 + t q^i u^j) on one parity of j, denominators (1 - t q^i u^j) on the other.
            const bool numerator = (j % 2 == 1) == (flavor == Flavor::invariant);
            TrigradedSeries base = TrigradedSeries::one(caps);
            base.add_term({1, i, j}, numerator ? Rational(1) : Rational(-1));
            out = out * series_pow_int(base, numerator ? mult : -mult);
        }
    return out;
}

TrigradedSeries collated_product_series(const CollationSpec& spec) {
    const Caps caps = spec.caps();
    const int r1 = spec.group.r1();
    const TrigradedSeries h = super_molien(GroupAction::of_group(spec.group), caps.q, r1);
    return collated_product_from_dims([&](int i, int j) { return h.coeff({0, i, j}).to_long(); }, r1, spec.flavor,
                                      caps);
}

TrigradedSeries young_exterior_closed_form(int ell, int N, int du) {
    return collated_product_from_dims([&](int i, int j) { return i == 0 ? binomial(ell, j).to_long() : 0L; }, ell,
                                      Flavor::invariant, {N, 0, du});
}

TrigradedSeries diagonal_closed_form(int r0, int r1, Flavor flavor, Caps caps) {
    auto multichoose = [](int m, int i) { return m == 0 ? Rational(i == 0 ? 1 : 0) : binomial(m + i - 1, i); };
    return collated_product_from_dims(
        [&](int i, int j) { return (multichoose(r0, i) * binomial(r1, j)).to_long(); }, r1, flavor, caps);
}

QMatrix block_cycle_matrix(const std::vector<QMatrix>& blocks) {
    const std::size_t m = blocks.size();
    if (m == 0)
        return QMatrix();
    const std::size_t r = blocks[0].rows();
    for (const auto& a : blocks)
        if (a.rows() != r || a.cols() != r)
            throw Error(ErrorKind::DimensionMismatch, "blocks must be square of equal size");
    QMatrix b(r * m, r * m);
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t row = k, col = (k + m - 1) % m;  // A_1 at (1, m), A_k at (k, k-1)
        for (std::size_t x = 0; x < r; ++x)
            for (std::size_t y = 0; y < r; ++y)
                b(row * r + x, col * r + y) = blocks[k](x, y);
    }
    return b;
}

bool verify_block_cycle_determinant(const std::vector<QMatrix>& blocks) {
    if (blocks.empty())
        return true;
    const std::size_t r = blocks[0].rows();
    const QMatrix b = block_cycle_matrix(blocks);
    QMatrix prod = QMatrix::identity(r);
    for (const auto& a : blocks)
        prod = a * prod;  // A_m ... A_1
    return determinant(QMatrix::identity(b.rows()) - b) == determinant(QMatrix::identity(r) - prod);
}

TrigradedSeries m_cycle_average(const MatrixGroup& g, int m, int dq) {
    const Caps caps{0, dq, m * g.r1()};
    const Permutation cycle = Permutation::long_cycle(m);
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    TrigradedSeries total(caps);
    long count = 0;
    while (true) {
        WreathElement w{cycle, {}};
        for (std::size_t k : idx)
            w.g.push_back(g.elements()[k]);
        auto num = TrigradedSeries::from_unipoly(charpoly_det(w.odd_block()), Var::u, caps);
        auto den = TrigradedSeries::from_unipoly(charpoly_det(w.even_block()), Var::q, caps);
        total += num * series_inv(den);
        ++count;
        int k = m - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == g.order())
            idx[static_cast<std::size_t>(k--)] = 0;
        if (k < 0)
            break;
    }
    return total * Rational(1, count);
}

bool verify_m_cycle_identity(const MatrixGroup& g, int m, int dq) {
    const TrigradedSeries h = super_molien(GroupAction::of_group(g), dq, m * g.r1());
    return m_cycle_average(g, m, dq) == scale_exponents(flip_u(h), m);
}

namespace {
MatrixGroup trivial_superspace() { return close_group(1, 1, {}); }
}  // namespace

TrigradedSeries superspace_direct(Flavor flavor, int n_max, int dq) {
    CollationSpec spec{trivial_superspace(), n_max, dq, n_max, flavor};
    return collated_sum_series(spec);
}

TrigradedSeries superspace_product_form(Flavor flavor, int n_max, int dq) {
    const Caps caps{n_max, dq, n_max};
    TrigradedSeries out = TrigradedSeries::one(caps);
    // invariant: (1 + t u q^i) / (1 - t q^i); sgn: (1 + t q^i) / (1 - t u q^i).
    const int num_u = flavor == Flavor::invariant ? 1 : 0;
    for (int i = 0; i <= dq; ++i) {
        TrigradedSeries num = TrigradedSeries::one(caps), den = TrigradedSeries::one(caps);
        num.add_term({1, i, num_u}, Rational(1));
        den.add_term({1, i, 1 - num_u}, Rational(-1));
        out = out * num * series_inv(den);
    }
    return out;
}

TrigradedSeries superspace_qbinomial_form(Flavor flavor, int n_max, int dq) {
    const Caps caps{n_max, dq, n_max};
    TrigradedSeries out = TrigradedSeries::one(caps);
    TrigradedSeries partial = TrigradedSeries::one(caps);
    for (int k = 1; k <= n_max; ++k) {
        // invariant factor (1 + q^{k-1} u); sgn factor (u + q^{k-1}).
        TrigradedSeries num(caps);
        num.add_term({0, flavor == Flavor::invariant ? 0 : k - 1, 0}, Rational(1));
        num.add_term({0, flavor == Flavor::invariant ? k - 1 : 0, 1}, Rational(1));
        TrigradedSeries den = TrigradedSeries::one(caps);
        den.add_term({0, k, 0}, Rational(-1));
        partial = partial * num * series_inv(den);
        for (const auto& [e, c] : partial.terms())
            out.add_term({k, e.q, e.u}, c);
    }
    return out;
}

bool superspace_identity_check(int n_max, int dq) {
    for (Flavor f : {Flavor::invariant, Flavor::sgn}) {
        const TrigradedSeries direct = superspace_direct(f, n_max, dq);
        if (!(direct == superspace_product_form(f, n_max, dq)) || !(direct == superspace_qbinomial_form(f, n_max, dq)))
            return false;
    }
    return true;
}

}  // namespace superinv
