#pragma once

#include <optional>
#include <vector>

#include "superinv/group.hpp"
#include "superinv/series.hpp"

namespace superinv {

// A finite group acting on Sym±(V^n) together with a linear character.
// A plain matrix group is the case n = 1 with trivial slot permutation.
class GroupAction {
public:
    static GroupAction of_group(const MatrixGroup& g, LinearCharacter chi);
    static GroupAction of_group(const MatrixGroup& g) { return of_group(g, LinearCharacter::trivial(g.order())); }
    static GroupAction of_wreath(const PermGroup& p, const MatrixGroup& g, int n, Flavor flavor,
                                 std::size_t cap = 200000);

    const AlgebraSignature& sig() const { return sig_; }
    const std::vector<WreathElement>& elements() const { return elements_; }
    const LinearCharacter& character() const { return chi_; }
    std::size_t order() const { return elements_.size(); }

private:
    AlgebraSignature sig_;
    std::vector<WreathElement> elements_;
    LinearCharacter chi_;
};

// sum_{i<=dq, j<=du} dim (Sym±V)^{G,chi}_{ij} q^i u^j, with du defaulting to the odd dimension.
TrigradedSeries super_molien(const GroupAction& action, int dq, std::optional<int> du = std::nullopt);

// Rank of the relative Reynolds operator on the (i, j) monomial basis. Never consults Molien.
std::size_t invariant_dimension_bruteforce(const GroupAction& action, int i, int j, std::size_t max_basis = 5000);

struct MolienMismatch {
    int i, j;
    Rational molien;
    std::size_t oracle;
};

struct MolienReport {
    std::size_t agreements = 0;
    std::vector<MolienMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

MolienReport molien_vs_oracle(const GroupAction& action, int dq);

}  // namespace superinv
