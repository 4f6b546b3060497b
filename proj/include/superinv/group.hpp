#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "superinv/matrix.hpp"
#include "superinv/partition.hpp"
#include "superinv/permutation.hpp"
#include "superinv/superpoly.hpp"

namespace superinv {

enum class Flavor { invariant, sgn };

const char* to_string(Flavor f);
Flavor parse_flavor(const std::string& name);

// Block-diagonal element g0 ⊕ g1 of GL(V0) x GL(V1).
struct GradedGroupElement {
    QMatrix g0, g1;

    static GradedGroupElement identity(int r0, int r1);
    friend GradedGroupElement operator*(const GradedGroupElement& a, const GradedGroupElement& b) {
        return {a.g0 * b.g0, a.g1 * b.g1};
    }
    friend bool operator==(const GradedGroupElement&, const GradedGroupElement&) = default;
    friend bool operator<(const GradedGroupElement& a, const GradedGroupElement& b) {
        return a.g0 < b.g0 || (a.g0 == b.g0 && a.g1 < b.g1);
    }
};

class MatrixGroup {
public:
    MatrixGroup() = default;
    int r0() const { return r0_; }
    int r1() const { return r1_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<GradedGroupElement>& elements() const { return elements_; }
    const std::vector<GradedGroupElement>& generators() const { return generators_; }
    std::optional<std::size_t> index_of(const GradedGroupElement& g) const;

private:
    friend MatrixGroup close_group(int, int, std::vector<GradedGroupElement>, std::size_t);
    int r0_ = 0, r1_ = 0;
    std::vector<GradedGroupElement> elements_;  // elements_[0] is the identity
    std::vector<GradedGroupElement> generators_;
    std::map<GradedGroupElement, std::size_t> index_;
};

// Breadth-first closure under right multiplication by the (sorted) generators.
MatrixGroup close_group(int r0, int r1, std::vector<GradedGroupElement> generators, std::size_t cap = 20000);

class PermGroup {
public:
    PermGroup() = default;
    PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }

private:
    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
};

PermGroup close_perm_group(int degree, std::vector<Permutation> generators, std::size_t cap = 20000);
PermGroup symmetric_group(int n);
PermGroup cyclic_group(int n);  // generated by (1 2 ... n)
PermGroup young_subgroup(const std::vector<int>& alpha);

Partition cycle_type(const Permutation& p);

// (sigma, g_1..g_n) acting on V^n by v -> (g_{sigma^{-1}(i)} v_{sigma^{-1}(i)})_i.
struct WreathElement {
    Permutation sigma;
    std::vector<GradedGroupElement> g;

    int slots() const { return sigma.degree(); }
    // Block matrix on V0^n (resp. V1^n): block (sigma(k), k) is g_k.
    QMatrix even_block() const;
    QMatrix odd_block() const;
    // Substitution action on Sym±(V^n): g_k on row k, then row k -> sigma(k).
    SuperPolynomial act(const SuperPolynomial& f) const;

    // (sigma, g)(tau, h) = (sigma tau, k) with k_j = g_{tau(j)} h_j.
    friend WreathElement operator*(const WreathElement& a, const WreathElement& b);
    friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

std::vector<WreathElement> build_wreath(const PermGroup& p, const MatrixGroup& g, int n, std::size_t cap = 200000);
int wreath_sign(const WreathElement& w);

// Generators of P[G]: (s, 1) for s a generator of P and (1, g at slot k) for g a generator of G.
std::vector<WreathElement> wreath_generators(const PermGroup& p, const MatrixGroup& g, int n);

struct ShuffleRep {
    Permutation perm;
    int sign;
};

// Minimum-length coset representatives for S_a x S_b in S_{a+b}: one per a-subset S of
// positions (lexicographic), placing values 1..a at S in increasing order.
std::vector<ShuffleRep> shuffle_reps(int a, int b);
// Same for an arbitrary sequence of consecutive blocks.
std::vector<ShuffleRep> multi_shuffle_reps(const std::vector<int>& blocks);

PermGroup perm_group_of_wreath(const PermGroup& p, const PermGroup& g, int n);
// Reads a matrix group whose elements are permutation matrices on V0 ⊕ V1.
PermGroup as_permutation_group(const MatrixGroup& g);

// ±1-valued homomorphism, values aligned with the element order of its group.
class LinearCharacter {
public:
    LinearCharacter() = default;
    static LinearCharacter trivial(std::size_t order);
    // det g0 when r0 > 0, else det g1.
    static LinearCharacter sign_character(const MatrixGroup& g);
    static LinearCharacter from_values(const std::vector<Rational>& values, const MatrixGroup& g);
    static LinearCharacter from_wreath(const std::vector<WreathElement>& elements, Flavor flavor);

    int operator[](std::size_t k) const { return values_[k]; }
    std::size_t size() const { return values_.size(); }
    const std::vector<int>& values() const { return values_; }

private:
    std::vector<int> values_;
};

}  // namespace superinv
