#include "superinv/shuffle.hpp"

#include <random>

#include "superinv/errors.hpp"
#include "superinv/wreath_series.hpp"

namespace superinv {

SuperPolynomial reynolds_project(const SuperPolynomial& f, const GroupAction& action) {
    if (!(f.sig() == action.sig()))
        throw Error(ErrorKind::SignatureMismatch, "polynomial signature differs from the action");
    SuperPolynomial acc(f.sig());
    for (std::size_t k = 0; k < action.order(); ++k) {
        SuperPolynomial img = action.elements()[k].act(f);
        acc += action.character()[k] > 0 ? img : img * Rational(-1);
    }
    return acc * Rational(1, static_cast<long>(action.order()));
}

std::vector<SuperPolynomial> invariant_basis(const GroupAction& action, int i, int j, std::size_t max_basis) {
    const auto monomials = bidegree_basis(action.sig(), i, j);
    if (monomials.size() > max_basis)
        throw Error(ErrorKind::BasisTooLarge, "bidegree basis has " + std::to_string(monomials.size()) + " elements");
    std::map<SuperMonomial, std::size_t, MonomialOrder> index;
    for (std::size_t k = 0; k < monomials.size(); ++k)
        index.emplace(monomials[k], k);
    std::vector<SuperPolynomial> projected;
    QMatrix coords(monomials.size(), monomials.size());
    for (std::size_t k = 0; k < monomials.size(); ++k) {
        SuperPolynomial m(action.sig());
        m.add_term(monomials[k], Rational(1));
        projected.push_back(reynolds_project(m, action));
        for (const auto& [mono, c] : projected.back().terms())
            coords(k, index.at(mono)) = c;
    }
    std::vector<SuperPolynomial> out;
    for (std::size_t k : independent_rows(coords))
        out.push_back(std::move(projected[k]));
    return out;
}

SuperPolynomial multi_shuffle_product(const std::vector<SuperPolynomial>& parts, bool signed_sum) {
    if (parts.empty())
        throw Error(ErrorKind::Domain, "shuffle of no factors");
    const int r0 = parts[0].sig().r0, r1 = parts[0].sig().r1;
    int n = 0;
    std::vector<int> blocks;
    for (const auto& p : parts) {
        if (p.sig().r0 != r0 || p.sig().r1 != r1)
            throw Error(ErrorKind::SignatureMismatch, "shuffle factors over different (r0, r1)");
        blocks.push_back(p.sig().n);
        n += p.sig().n;
    }
    SuperPolynomial prod = SuperPolynomial::constant({r0, r1, n}, Rational(1));
    int offset = 0;
    for (const auto& p : parts) {
        prod = prod * shift_rows(p, offset, n);
        offset += p.sig().n;
    }
    SuperPolynomial out({r0, r1, n});
    for (const auto& rep : multi_shuffle_reps(blocks)) {
        SuperPolynomial moved = apply_row_permutation(rep.perm, prod);
        if (signed_sum && rep.sign < 0)
            out -= moved;
        else
            out += moved;
    }
    return out;
}

SuperPolynomial shuffle_product(const SuperPolynomial& a, const SuperPolynomial& b, bool signed_sum) {
    return multi_shuffle_product({a, b}, signed_sum);
}

bool is_relative_invariant(const SuperPolynomial& f, const std::vector<WreathElement>& elements, Flavor flavor) {
    for (const auto& w : elements) {
        SuperPolynomial img = w.act(f);
        if (flavor == Flavor::sgn && wreath_sign(w) < 0)
            img *= Rational(-1);
        if (!(img == f))
            return false;
    }
    return true;
}

bool verify_closure(const SuperPolynomial& a, const SuperPolynomial& b, const MatrixGroup& g, Flavor flavor) {
    const int na = a.sig().n, nb = b.sig().n;
    if (!is_relative_invariant(a, wreath_generators(symmetric_group(na), g, na), flavor) ||
        !is_relative_invariant(b, wreath_generators(symmetric_group(nb), g, nb), flavor))
        return false;
    const SuperPolynomial p = shuffle_product(a, b, flavor == Flavor::sgn);
    return is_relative_invariant(p, wreath_generators(symmetric_group(na + nb), g, na + nb), flavor);
}

bool verify_associativity(const SuperPolynomial& a, const SuperPolynomial& b, const SuperPolynomial& c,
                          bool signed_sum) {
    const SuperPolynomial left = shuffle_product(shuffle_product(a, b, signed_sum), c, signed_sum);
    const SuperPolynomial right = shuffle_product(a, shuffle_product(b, c, signed_sum), signed_sum);
    return left == right && left == multi_shuffle_product({a, b, c}, signed_sum);
}

static int theta_parity(const SuperPolynomial& f) {
    int parity = -1;
    for (const auto& [m, c] : f.terms()) {
        int p = static_cast<int>(m.theta.size() % 2);
        if (parity >= 0 && parity != p)
            throw Error(ErrorKind::NotHomogeneous, "mixed theta parity");
        parity = p;
    }
    return parity < 0 ? 0 : parity;
}

bool verify_supercommutation(const SuperPolynomial& a, const SuperPolynomial& b, bool signed_sum) {
    if (a.sig().n != 1 || b.sig().n != 1)
        throw Error(ErrorKind::DimensionMismatch, "supercommutation is checked on single-row elements");
    const int pa = theta_parity(a), pb = theta_parity(b);
    int sign = (pa && pb) ? -1 : 1;
    if (signed_sum)
        sign = -sign;
    return shuffle_product(a, b, signed_sum) == shuffle_product(b, a, signed_sum) * Rational(sign);
}

namespace {

// Ordered n-tuples of bidegrees summing to (i, j), each part with j_k <= max_j.
void bidegree_tuples(int n, int i, int j, int max_j, std::vector<Bidegree>& cur,
                     std::vector<std::vector<Bidegree>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        if (j <= max_j) {
            cur.push_back({i, j});
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= std::min(j, max_j); ++b) {
            cur.push_back({a, b});
            bidegree_tuples(n, i - a, j - b, max_j, cur, out);
            cur.pop_back();
        }
}

}  // namespace

GenerationRank degree_one_generation_rank(const MatrixGroup& g, Flavor flavor, int n, int i, int j) {
    const AlgebraSignature sig{g.r0(), g.r1(), n};
    GenerationRank out;
    out.full = invariant_dimension_bruteforce(GroupAction::of_wreath(symmetric_group(n), g, n, flavor), i, j);
    if (n == 0)
        return {out.full, out.full};
    const GroupAction one = GroupAction::of_group(g);
    std::map<Bidegree, std::vector<SuperPolynomial>> degree_one;
    std::vector<std::vector<Bidegree>> tuples;
    std::vector<Bidegree> cur;
    bidegree_tuples(n, i, j, g.r1(), cur, tuples);
    const auto monomials = bidegree_basis(sig, i, j);
    std::map<SuperMonomial, std::size_t, MonomialOrder> index;
    for (std::size_t k = 0; k < monomials.size(); ++k)
        index.emplace(monomials[k], k);
    std::vector<std::vector<Rational>> rows;
    for (const auto& tuple : tuples) {
        std::vector<const std::vector<SuperPolynomial>*> choices;
        bool empty = false;
        for (const auto& d : tuple) {
            auto it = degree_one.find(d);
            if (it == degree_one.end())
                it = degree_one.emplace(d, invariant_basis(one, d.i, d.j)).first;
            empty |= it->second.empty();
            choices.push_back(&it->second);
        }
        if (empty)
            continue;
        std::vector<std::size_t> pick(tuple.size(), 0);
        while (true) {
            SuperPolynomial prod = (*choices[0])[pick[0]];
            for (std::size_t k = 1; k < tuple.size(); ++k)
                prod = shuffle_product(prod, (*choices[k])[pick[k]], flavor == Flavor::sgn);
            std::vector<Rational> row(monomials.size());
            for (const auto& [mono, c] : prod.terms())
                row[index.at(mono)] = c;
            rows.push_back(std::move(row));
            int k = static_cast<int>(tuple.size()) - 1;
            while (k >= 0 && ++pick[static_cast<std::size_t>(k)] == choices[static_cast<std::size_t>(k)]->size())
                pick[static_cast<std::size_t>(k--)] = 0;
            if (k < 0)
                break;
        }
    }
    QMatrix span(rows.size(), monomials.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < monomials.size(); ++c)
            span(r, c) = rows[r][c];
    out.spanned = matrix_rank(span);
    return out;
}

const std::vector<SuperPolynomial>& InvariantBasisCache::get(int a, int i, int j) {
    auto key = std::make_tuple(a, i, j);
    auto it = bases_.find(key);
    if (it != bases_.end())
        return it->second;
    auto act = actions_.find(a);
    if (act == actions_.end())
        act = actions_.emplace(a, GroupAction::of_wreath(symmetric_group(a), g_, a, flavor_)).first;
    return bases_.emplace(key, invariant_basis(act->second, i, j)).first->second;
}

BatteryCount closure_battery(InvariantBasisCache& cache, int max_rows, int max_i) {
    BatteryCount count;
    const int r1 = cache.group().r1();
    for (int a = 0; a <= max_rows; ++a)
        for (int b = 0; a + b <= max_rows; ++b)
            for (int ia = 0; ia <= max_i; ++ia)
                for (int ja = 0; ja <= a * r1; ++ja)
                    for (int ib = 0; ia + ib <= max_i; ++ib)
                        for (int jb = 0; jb <= b * r1; ++jb) {
                            const auto& ba = cache.get(a, ia, ja);
                            const auto& bb = cache.get(b, ib, jb);
                            for (const auto& x : ba)
                                for (const auto& y : bb) {
                                    ++count.checks;
                                    if (!verify_closure(x, y, cache.group(), cache.flavor()))
                                        ++count.failures;
                                }
                        }
    return count;
}

namespace {

SuperPolynomial random_invariant(InvariantBasisCache& cache, int a, std::mt19937_64& rng) {
    const AlgebraSignature sig{cache.group().r0(), cache.group().r1(), a};
    std::uniform_int_distribution<int> coeff(-3, 3);
    if (a == 0) {
        int c = coeff(rng);
        return SuperPolynomial::constant(sig, Rational(c == 0 ? 1 : c));
    }
    std::uniform_int_distribution<int> di(0, 2), dj(0, std::min(2, a * sig.r1));
    for (int attempt = 0; attempt < 32; ++attempt) {
        const auto& basis = cache.get(a, di(rng), dj(rng));
        if (basis.empty())
            continue;
        SuperPolynomial f(sig);
        for (const auto& b : basis)
            f += b * Rational(coeff(rng));
        if (!f.is_zero())
            return f;
    }
    return SuperPolynomial(sig);
}

}  // namespace

BatteryCount associativity_battery(InvariantBasisCache& cache, int max_rows, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int lo = max_rows >= 3 ? 1 : 0;
    std::uniform_int_distribution<int> rows(lo, std::max(lo, max_rows - 2 * lo));
    BatteryCount out;
    const bool signed_sum = cache.flavor() == Flavor::sgn;
    while (static_cast<int>(out.checks) < count) {
        int a = rows(rng), b = rows(rng), c = rows(rng);
        if (a + b + c > max_rows)
            continue;
        SuperPolynomial x = random_invariant(cache, a, rng);
        SuperPolynomial y = random_invariant(cache, b, rng);
        SuperPolynomial z = random_invariant(cache, c, rng);
        ++out.checks;
        if (!verify_associativity(x, y, z, signed_sum))
            ++out.failures;
    }
    return out;
}

BatteryCount supercommutation_battery(int r0, int r1) {
    const AlgebraSignature sig{r0, r1, 1};
    std::vector<SuperPolynomial> samples;
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= std::min(r1, 2); ++j) {
            SuperPolynomial sum(sig);
            for (const auto& m : bidegree_basis(sig, i, j)) {
                SuperPolynomial single(sig);
                single.add_term(m, Rational(1));
                samples.push_back(single);
                sum += single * Rational(static_cast<long>(samples.size()));
            }
            if (sum.size() > 1)
                samples.push_back(sum);
        }
    BatteryCount out;
    for (const auto& a : samples)
        for (const auto& b : samples)
            for (bool s : {false, true}) {
                ++out.checks;
                if (!verify_supercommutation(a, b, s))
                    ++out.failures;
            }
    return out;
}

BatteryCount generation_battery(const MatrixGroup& g, Flavor flavor, int max_n, int max_i) {
    BatteryCount out;
    for (int n = 1; n <= max_n; ++n)
        for (int i = 0; i <= max_i; ++i)
            for (int j = 0; j <= n * g.r1(); ++j) {
                GenerationRank r = degree_one_generation_rank(g, flavor, n, i, j);
                ++out.checks;
                if (r.spanned != r.full)
                    ++out.failures;
            }
    return out;
}

ShuffleAlgebraReport shuffle_algebra_report(const MatrixGroup& g, Flavor flavor, int N, int dq, std::uint64_t seed) {
    ShuffleAlgebraReport rep;
    CollationSpec spec{g, N, dq, -1, flavor};
    rep.series_match = collated_sum_series(spec) == collated_product_series(spec);
    const int max_i = std::min(dq, 4);
    rep.generation = generation_battery(g, flavor, N, max_i);
    InvariantBasisCache cache(g, flavor);
    rep.closure = closure_battery(cache, N, max_i);
    rep.associativity = associativity_battery(cache, N, 10, seed);
    return rep;
}

bool shuffle_algebra_check(const MatrixGroup& g, Flavor flavor, int N, int dq) {
    return shuffle_algebra_report(g, flavor, N, dq).ok();
}

}  // namespace superinv
