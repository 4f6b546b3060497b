#include "superinv/molien.hpp"

#include <map>

#include "superinv/errors.hpp"

namespace superinv {

GroupAction GroupAction::of_group(const MatrixGroup& g, LinearCharacter chi) {
    if (chi.size() != g.order())
        throw Error(ErrorKind::InvalidCharacter, "character length differs from group order");
    GroupAction a;
    a.sig_ = {g.r0(), g.r1(), 1};
    for (const auto& e : g.elements())
        a.elements_.push_back({Permutation::identity(1), {e}});
    a.chi_ = std::move(chi);
    return a;
}

GroupAction GroupAction::of_wreath(const PermGroup& p, const MatrixGroup& g, int n, Flavor flavor, std::size_t cap) {
    GroupAction a;
    a.sig_ = {g.r0(), g.r1(), n};
    a.elements_ = build_wreath(p, g, n, cap);
    a.chi_ = LinearCharacter::from_wreath(a.elements_, flavor);
    return a;
}

TrigradedSeries super_molien(const GroupAction& action, int dq, std::optional<int> du) {
    const Caps caps{0, dq, du.value_or(action.sig().odd_vars())};
    // Group elements with equal characteristic polynomials contribute equal summands.
    std::map<std::pair<std::vector<Rational>, std::vector<Rational>>, long> weight;
    for (std::size_t k = 0; k < action.order(); ++k) {
        const auto& w = action.elements()[k];
        auto key = std::make_pair(charpoly_det(w.even_block()).coeffs(), charpoly_det(w.odd_block()).coeffs());
        weight[key] += action.character()[k];
    }
    TrigradedSeries total(caps);
    for (const auto& [key, wt] : weight) {
        if (wt == 0)
            continue;
        // det(I + uB1): flip the sign of odd coefficients of det(I - zB1).
        std::vector<Rational> num = key.second;
        for (std::size_t k = 1; k < num.size(); k += 2)
            num[k] = -num[k];
        TrigradedSeries numerator = TrigradedSeries::from_unipoly(UniPoly(num), Var::u, caps);
        TrigradedSeries denominator = TrigradedSeries::from_unipoly(UniPoly(key.first), Var::q, caps);
        total += numerator * series_inv(denominator) * Rational(wt);
    }
    return total * Rational(1, static_cast<long>(action.order()));
}

std::size_t invariant_dimension_bruteforce(const GroupAction& action, int i, int j, std::size_t max_basis) {
    const AlgebraSignature sig = action.sig();
    const auto basis = bidegree_basis(sig, i, j);
    if (basis.size() > max_basis)
        throw Error(ErrorKind::BasisTooLarge, "bidegree basis has " + std::to_string(basis.size()) + " elements");
    if (basis.empty())
        return 0;
    std::map<SuperMonomial, std::size_t, MonomialOrder> index;
    for (std::size_t k = 0; k < basis.size(); ++k)
        index.emplace(basis[k], k);
    // Row b holds |G| times the relative Reynolds image of basis[b]; chi is ±1 so chi(g^{-1}) = chi(g).
    QMatrix reynolds(basis.size(), basis.size());
    for (std::size_t b = 0; b < basis.size(); ++b) {
        SuperPolynomial m(sig);
        m.add_term(basis[b], Rational(1));
        for (std::size_t k = 0; k < action.order(); ++k) {
            SuperPolynomial img = action.elements()[k].act(m);
            const int chi = action.character()[k];
            for (const auto& [mono, c] : img.terms())
                reynolds(b, index.at(mono)) += chi > 0 ? c : -c;
        }
    }
    return matrix_rank(reynolds);
}

MolienReport molien_vs_oracle(const GroupAction& action, int dq) {
    MolienReport report;
    const TrigradedSeries h = super_molien(action, dq);
    for (int i = 0; i <= dq; ++i)
        for (int j = 0; j <= action.sig().odd_vars(); ++j) {
            Rational m = h.coeff({0, i, j});
            std::size_t o = invariant_dimension_bruteforce(action, i, j);
            if (m == Rational(static_cast<long>(o)))
                ++report.agreements;
            else
                report.mismatches.push_back({i, j, m, o});
        }
    return report;
}

}  // namespace superinv
