#include "superinv/permutation.hpp"

#include "superinv/errors.hpp"

namespace superinv {

Permutation::Permutation(std::vector<int> one_line) : p_(std::move(one_line)) {
    std::vector<bool> seen(p_.size(), false);
    for (int v : p_) {
        if (v < 1 || v > static_cast<int>(p_.size()) || seen[static_cast<std::size_t>(v - 1)])
            throw Error(ErrorKind::Domain, "not a permutation in one-line notation");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(p));
}

Permutation Permutation::long_cycle(int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        p[static_cast<std::size_t>(i)] = (i + 1) % m + 1;
    return Permutation(std::move(p));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < p_.size(); ++i)
        if (p_[i] != static_cast<int>(i) + 1)
            return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> q(p_.size());
    for (std::size_t i = 0; i < p_.size(); ++i)
        q[static_cast<std::size_t>(p_[i] - 1)] = static_cast<int>(i) + 1;
    Permutation out;
    out.p_ = std::move(q);
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw Error(ErrorKind::DegreeMismatch, "composing permutations of different degree");
    Permutation out;
    out.p_.resize(a.p_.size());
    for (std::size_t i = 0; i < a.p_.size(); ++i)
        out.p_[i] = a.p_[static_cast<std::size_t>(b.p_[i] - 1)];
    return out;
}

int perm_sign(const Permutation& p) {
    // Parity from cycle decomposition: sign = (-1)^(n - #cycles).
    const int n = p.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i - 1)])
            continue;
        ++cycles;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = p(j))
            seen[static_cast<std::size_t>(j - 1)] = true;
    }
    return (n - cycles) % 2 ? -1 : 1;
}

}  // namespace superinv
