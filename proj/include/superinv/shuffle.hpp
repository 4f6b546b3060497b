#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "superinv/group.hpp"
#include "superinv/molien.hpp"
#include "superinv/superpoly.hpp"

namespace superinv {

// (1/|G|) sum_g chi(g^{-1}) g.f
SuperPolynomial reynolds_project(const SuperPolynomial& f, const GroupAction& action);

// Maximal independent subset of the projected bidegree monomials.
std::vector<SuperPolynomial> invariant_basis(const GroupAction& action, int i, int j, std::size_t max_basis = 5000);

// A over a rows, B over b rows: shift B by a, multiply, then sum (sign-weighted if `signed_sum`)
// over the (a, b) shuffle representatives.
SuperPolynomial shuffle_product(const SuperPolynomial& a, const SuperPolynomial& b, bool signed_sum);
// Simultaneous shuffle of several blocks over the multi-block representatives.
SuperPolynomial multi_shuffle_product(const std::vector<SuperPolynomial>& parts, bool signed_sum);

// f is fixed (invariant) or sign-twisted (sgn) by every listed element.
bool is_relative_invariant(const SuperPolynomial& f, const std::vector<WreathElement>& elements, Flavor flavor);

bool verify_closure(const SuperPolynomial& a, const SuperPolynomial& b, const MatrixGroup& g, Flavor flavor);
bool verify_associativity(const SuperPolynomial& a, const SuperPolynomial& b, const SuperPolynomial& c,
                          bool signed_sum);
bool verify_supercommutation(const SuperPolynomial& a, const SuperPolynomial& b, bool signed_sum);

struct GenerationRank {
    std::size_t spanned = 0, full = 0;
};
GenerationRank degree_one_generation_rank(const MatrixGroup& g, Flavor flavor, int n, int i, int j);

struct BatteryCount {
    std::size_t checks = 0, failures = 0;
    bool ok() const { return failures == 0; }
    BatteryCount& operator+=(const BatteryCount& o) {
        checks += o.checks;
        failures += o.failures;
        return *this;
    }
};

// Memoized invariant bases of (Sym±(V^a))^{S_a[G], flavor} by (a, i, j).
class InvariantBasisCache {
public:
    InvariantBasisCache(MatrixGroup g, Flavor flavor) : g_(std::move(g)), flavor_(flavor) {}
    const std::vector<SuperPolynomial>& get(int a, int i, int j);
    const MatrixGroup& group() const { return g_; }
    Flavor flavor() const { return flavor_; }

private:
    MatrixGroup g_;
    Flavor flavor_;
    std::map<int, GroupAction> actions_;
    std::map<std::tuple<int, int, int>, std::vector<SuperPolynomial>> bases_;
};

// verify_closure over all basis pairs with a + b <= max_rows and i_A + i_B <= max_i.
BatteryCount closure_battery(InvariantBasisCache& cache, int max_rows, int max_i);
// verify_associativity on `count` seeded triples of random invariants with a + b + c <= max_rows.
BatteryCount associativity_battery(InvariantBasisCache& cache, int max_rows, int count, std::uint64_t seed);
// Sign table on x^a theta^b monomials (and sums of them) for every parity combination.
BatteryCount supercommutation_battery(int r0, int r1);
// spanned == full for n <= max_n, i <= max_i, all j.
BatteryCount generation_battery(const MatrixGroup& g, Flavor flavor, int max_n, int max_i);

struct ShuffleAlgebraReport {
    bool series_match = false;
    BatteryCount generation, closure, associativity;
    bool ok() const { return series_match && generation.ok() && closure.ok() && associativity.ok(); }
};

ShuffleAlgebraReport shuffle_algebra_report(const MatrixGroup& g, Flavor flavor, int N, int dq, std::uint64_t seed = 42);
bool shuffle_algebra_check(const MatrixGroup& g, Flavor flavor, int N, int dq);

}  // namespace superinv
