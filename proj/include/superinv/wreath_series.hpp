#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "superinv/group.hpp"
#include "superinv/molien.hpp"
#include "superinv/series.hpp"

namespace superinv {

// Hilbert series of (Sym±(V^n))^{P[G]} (or its sgn-twisted antiinvariants), reported at (q, u).
// Direct route: Molien over the enumerated wreath product.
TrigradedSeries wreath_hilbert_direct(const PermGroup& p, const MatrixGroup& g, int n, Flavor flavor, int dq,
                                      std::optional<int> du = std::nullopt);
// Plethysm route: cycle index of P evaluated at the Hilbert series of G, with u -> -u on both sides.
TrigradedSeries wreath_hilbert_plethysm(const PermGroup& p, const MatrixGroup& g, int n, Flavor flavor, int dq,
                                        std::optional<int> du = std::nullopt);

struct CollationSpec {
    MatrixGroup group;
    int N = 3;
    int dq = 6;
    int du = -1;  // negative: N * r1
    Flavor flavor = Flavor::invariant;

    Caps caps() const;
};

// sum_n t^n H(S_n[G]), each summand from the direct route.
TrigradedSeries collated_sum_series(const CollationSpec& spec);
// Infinite product over (i, j) with exponents a_ij = dim (Sym±V)^G_{ij}.
TrigradedSeries collated_product_series(const CollationSpec& spec);
// The same product with caller-supplied exponents.
TrigradedSeries collated_product_from_dims(const std::function<long(int, int)>& a, int max_j, Flavor flavor,
                                           Caps caps);

// Closed forms that never consult Molien.
TrigradedSeries young_exterior_closed_form(int ell, int N, int du);
TrigradedSeries diagonal_closed_form(int r0, int r1, Flavor flavor, Caps caps);

// rm x rm matrix with A_1 in the top-right block and A_k at block (k, k-1).
QMatrix block_cycle_matrix(const std::vector<QMatrix>& blocks);
bool verify_block_cycle_determinant(const std::vector<QMatrix>& blocks);

// Average over G^m of det(1 - u B1) / det(1 - q B0) for the m-cycle, at (q, -u) convention.
TrigradedSeries m_cycle_average(const MatrixGroup& g, int m, int dq);
bool verify_m_cycle_identity(const MatrixGroup& g, int m, int dq);

// Superspace r0 = r1 = 1, S_n acting on both.
TrigradedSeries superspace_direct(Flavor flavor, int n_max, int dq);
TrigradedSeries superspace_product_form(Flavor flavor, int n_max, int dq);
TrigradedSeries superspace_qbinomial_form(Flavor flavor, int n_max, int dq);
bool superspace_identity_check(int n_max, int dq);

}  // namespace superinv
