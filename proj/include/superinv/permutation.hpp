#pragma once

#include <compare>
#include <vector>

namespace superinv {

// Bijection of {1..n} in one-line notation: images()[i-1] = sigma(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);  // validates bijectivity

    static Permutation identity(int n);
    // The cycle (1 2 ... m) as an element of S_m.
    static Permutation long_cycle(int m);

    int degree() const { return static_cast<int>(p_.size()); }
    int operator()(int i) const { return p_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return p_; }
    bool is_identity() const;

    Permutation inverse() const;
    // (a * b)(i) = a(b(i)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> p_;
};

int perm_sign(const Permutation& p);

}  // namespace superinv
