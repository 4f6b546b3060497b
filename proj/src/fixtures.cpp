#include "superinv/fixtures.hpp"

namespace superinv::fixtures {

namespace {

QMatrix permutation_matrix(const Permutation& p) {
    const auto n = static_cast<std::size_t>(p.degree());
    QMatrix m(n, n);
    for (int c = 1; c <= p.degree(); ++c)
        m(static_cast<std::size_t>(p(c) - 1), static_cast<std::size_t>(c - 1)) = 1;
    return m;
}

MatrixGroup from_perm_group(const PermGroup& p, bool even, bool odd) {
    const int n = p.degree();
    std::vector<GradedGroupElement> gens;
    for (const auto& s : p.generators()) {
        QMatrix m = permutation_matrix(s);
        gens.push_back({even ? m : QMatrix(), odd ? m : QMatrix()});
    }
    return close_group(even ? n : 0, odd ? n : 0, std::move(gens));
}

}  // namespace

MatrixGroup trivial(int r0, int r1) { return close_group(r0, r1, {}); }

MatrixGroup pm1() { return close_group(1, 0, {{QMatrix{{Rational(-1)}}, QMatrix()}}); }

MatrixGroup symmetric_on_even(int n) { return from_perm_group(symmetric_group(n), true, false); }
MatrixGroup symmetric_on_odd(int n) { return from_perm_group(symmetric_group(n), false, true); }
MatrixGroup symmetric_diagonal(int n) { return from_perm_group(symmetric_group(n), true, true); }

MatrixGroup young_on_exterior(const std::vector<int>& alpha) {
    return from_perm_group(young_subgroup(alpha), false, true);
}

std::vector<NamedGroup> oracle_groups() {
    return {
        {"trivial(1,0)", trivial(1, 0)},
        {"trivial(0,1)", trivial(0, 1)},
        {"trivial(1,1)", trivial(1, 1)},
        {"trivial(2,2)", trivial(2, 2)},
        {"trivial(3,2)", trivial(3, 2)},
        {"pm1", pm1(), true},
        {"S2-even", symmetric_on_even(2), true},
        {"S2-odd", symmetric_on_odd(2), true},
        {"S2-diagonal", symmetric_diagonal(2), true},
        {"S3-even", symmetric_on_even(3), true},
        {"S3-diagonal", symmetric_diagonal(3), true},
        {"S(2,1)-exterior", young_on_exterior({2, 1}), true},
    };
}

}  // namespace superinv::fixtures
