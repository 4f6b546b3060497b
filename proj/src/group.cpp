#include "superinv/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "superinv/errors.hpp"

namespace superinv {

const char* to_string(Flavor f) { return f == Flavor::invariant ? "invariant" : "sgn"; }

Flavor parse_flavor(const std::string& name) {
    if (name == "invariant" || name == "plain" || name == "trivial")
        return Flavor::invariant;
    if (name == "sgn")
        return Flavor::sgn;
    throw Error(ErrorKind::Parse, "unknown flavor '" + name + "'");
}

GradedGroupElement GradedGroupElement::identity(int r0, int r1) {
    return {QMatrix::identity(static_cast<std::size_t>(r0)), QMatrix::identity(static_cast<std::size_t>(r1))};
}

std::optional<std::size_t> MatrixGroup::index_of(const GradedGroupElement& g) const {
    auto it = index_.find(g);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

MatrixGroup close_group(int r0, int r1, std::vector<GradedGroupElement> generators, std::size_t cap) {
    for (const auto& g : generators) {
        if (g.g0.rows() != static_cast<std::size_t>(r0) || g.g0.cols() != static_cast<std::size_t>(r0) ||
            g.g1.rows() != static_cast<std::size_t>(r1) || g.g1.cols() != static_cast<std::size_t>(r1))
            throw Error(ErrorKind::DimensionMismatch, "generator shape does not match (r0, r1)");
        if (determinant(g.g0).is_zero() || determinant(g.g1).is_zero())
            throw Error(ErrorKind::NotInvertible, "singular generator");
    }
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

    MatrixGroup grp;
    grp.r0_ = r0;
    grp.r1_ = r1;
    grp.generators_ = generators;
    auto add = [&](GradedGroupElement e) {
        if (grp.index_.count(e))
            return false;
        if (grp.elements_.size() >= cap)
            throw Error(ErrorKind::CapExceeded, "group closure exceeded " + std::to_string(cap) + " elements");
        grp.index_.emplace(e, grp.elements_.size());
        grp.elements_.push_back(std::move(e));
        return true;
    };
    add(GradedGroupElement::identity(r0, r1));
    for (std::size_t head = 0; head < grp.elements_.size(); ++head)
        for (const auto& s : generators)
            add(grp.elements_[head] * s);
    return grp;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {}

PermGroup close_perm_group(int degree, std::vector<Permutation> generators, std::size_t cap) {
    for (const auto& g : generators)
        if (g.degree() != degree)
            throw Error(ErrorKind::DegreeMismatch, "generator degree differs from group degree");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    std::vector<Permutation> elements{Permutation::identity(degree)};
    std::set<Permutation> seen(elements.begin(), elements.end());
    for (std::size_t head = 0; head < elements.size(); ++head)
        for (const auto& s : generators) {
            Permutation next = elements[head] * s;
            if (seen.insert(next).second) {
                if (elements.size() >= cap)
                    throw Error(ErrorKind::CapExceeded, "permutation group closure exceeded cap");
                elements.push_back(std::move(next));
            }
        }
    return PermGroup(degree, std::move(generators), std::move(elements));
}

static Permutation transposition(int n, int a, int b) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        p[static_cast<std::size_t>(i)] = i + 1;
    std::swap(p[static_cast<std::size_t>(a - 1)], p[static_cast<std::size_t>(b - 1)]);
    return Permutation(std::move(p));
}

PermGroup symmetric_group(int n) {
    std::vector<Permutation> gens;
    for (int i = 1; i < n; ++i)
        gens.push_back(transposition(n, i, i + 1));
    return close_perm_group(n, std::move(gens));
}

PermGroup cyclic_group(int n) {
    std::vector<Permutation> gens;
    if (n > 1)
        gens.push_back(Permutation::long_cycle(n));
    return close_perm_group(n, std::move(gens));
}

PermGroup young_subgroup(const std::vector<int>& alpha) {
    int n = 0;
    for (int a : alpha)
        n += a;
    std::vector<Permutation> gens;
    int start = 1;
    for (int a : alpha) {
        for (int i = start; i + 1 < start + a; ++i)
            gens.push_back(transposition(n, i, i + 1));
        start += a;
    }
    return close_perm_group(n, std::move(gens));
}

Partition cycle_type(const Permutation& p) {
    const int n = p.degree();
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> lengths;
    for (int i = 1; i <= n; ++i) {
        if (seen[static_cast<std::size_t>(i - 1)])
            continue;
        int len = 0;
        for (int j = i; !seen[static_cast<std::size_t>(j - 1)]; j = p(j)) {
            seen[static_cast<std::size_t>(j - 1)] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    return Partition(std::move(lengths));
}

static QMatrix block_matrix(const WreathElement& w, bool odd) {
    const int n = w.slots();
    const std::size_t r = n == 0 ? 0 : (odd ? w.g[0].g1.rows() : w.g[0].g0.rows());
    QMatrix out(r * static_cast<std::size_t>(n), r * static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const QMatrix& blk = odd ? w.g[static_cast<std::size_t>(k - 1)].g1 : w.g[static_cast<std::size_t>(k - 1)].g0;
        const std::size_t row0 = static_cast<std::size_t>(w.sigma(k) - 1) * r;
        const std::size_t col0 = static_cast<std::size_t>(k - 1) * r;
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b)
                out(row0 + a, col0 + b) = blk(a, b);
    }
    return out;
}

QMatrix WreathElement::even_block() const { return block_matrix(*this, false); }
QMatrix WreathElement::odd_block() const { return block_matrix(*this, true); }

SuperPolynomial WreathElement::act(const SuperPolynomial& f) const {
    if (f.sig().n != slots())
        throw Error(ErrorKind::DegreeMismatch, "wreath element and polynomial have different row counts");
    SuperPolynomial out = f;
    for (int k = 1; k <= slots(); ++k) {
        const auto& gk = g[static_cast<std::size_t>(k - 1)];
        if (gk.g0 != QMatrix::identity(gk.g0.rows()) || gk.g1 != QMatrix::identity(gk.g1.rows()))
            out = apply_graded_element(gk.g0, gk.g1, k, out);
    }
    if (!sigma.is_identity())
        out = apply_row_permutation(sigma.inverse(), out);
    return out;
}

WreathElement operator*(const WreathElement& a, const WreathElement& b) {
    if (a.slots() != b.slots())
        throw Error(ErrorKind::DegreeMismatch, "wreath elements of different degree");
    WreathElement out{a.sigma * b.sigma, {}};
    out.g.reserve(b.g.size());
    for (int j = 1; j <= b.slots(); ++j)
        out.g.push_back(a.g[static_cast<std::size_t>(b.sigma(j) - 1)] * b.g[static_cast<std::size_t>(j - 1)]);
    return out;
}

std::vector<WreathElement> build_wreath(const PermGroup& p, const MatrixGroup& g, int n, std::size_t cap) {
    if (p.degree() != n)
        throw Error(ErrorKind::DegreeMismatch, "permutation group degree differs from n");
    double size = static_cast<double>(p.order());
    for (int k = 0; k < n; ++k)
        size *= static_cast<double>(g.order());
    if (size > static_cast<double>(cap))
        throw Error(ErrorKind::CapExceeded, "wreath product larger than " + std::to_string(cap));
    std::vector<WreathElement> out;
    out.reserve(static_cast<std::size_t>(size));
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    for (const auto& sigma : p.elements()) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            WreathElement w{sigma, {}};
            for (std::size_t k : idx)
                w.g.push_back(g.elements()[k]);
            out.push_back(std::move(w));
            // Odometer over G^n, last slot fastest.
            int k = n - 1;
            while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == g.order())
                idx[static_cast<std::size_t>(k--)] = 0;
            if (k < 0)
                break;
        }
    }
    return out;
}

int wreath_sign(const WreathElement& w) { return perm_sign(w.sigma); }

std::vector<WreathElement> wreath_generators(const PermGroup& p, const MatrixGroup& g, int n) {
    const auto id = GradedGroupElement::identity(g.r0(), g.r1());
    std::vector<WreathElement> gens;
    for (const auto& s : p.generators())
        gens.push_back({s, std::vector<GradedGroupElement>(static_cast<std::size_t>(n), id)});
    for (int k = 0; k < n; ++k)
        for (const auto& h : g.generators()) {
            WreathElement w{Permutation::identity(n), std::vector<GradedGroupElement>(static_cast<std::size_t>(n), id)};
            w.g[static_cast<std::size_t>(k)] = h;
            gens.push_back(std::move(w));
        }
    return gens;
}

namespace {
void place_blocks(const std::vector<int>& blocks, std::size_t b, int first_value, std::vector<int>& line,
                  std::vector<ShuffleRep>& out) {
    if (b == blocks.size()) {
        Permutation p(line);
        out.push_back({p, perm_sign(p)});
        return;
    }
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < line.size(); ++i)
        if (line[i] == 0)
            free.push_back(i);
    const int size = blocks[b];
    // Lexicographic size-subsets of the free positions.
    std::vector<std::size_t> choice(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i)
        choice[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
    if (static_cast<std::size_t>(size) > free.size())
        return;
    while (true) {
        for (int i = 0; i < size; ++i)
            line[free[choice[static_cast<std::size_t>(i)]]] = first_value + i;
        place_blocks(blocks, b + 1, first_value + size, line, out);
        for (int i = 0; i < size; ++i)
            line[free[choice[static_cast<std::size_t>(i)]]] = 0;
        int i = size - 1;
        while (i >= 0 && choice[static_cast<std::size_t>(i)] == free.size() - static_cast<std::size_t>(size - i))
            --i;
        if (i < 0)
            break;
        ++choice[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < size; ++k)
            choice[static_cast<std::size_t>(k)] = choice[static_cast<std::size_t>(k - 1)] + 1;
    }
}
}  // namespace

std::vector<ShuffleRep> multi_shuffle_reps(const std::vector<int>& blocks) {
    int n = 0;
    for (int b : blocks) {
        if (b < 0)
            throw Error(ErrorKind::Domain, "negative block size");
        n += b;
    }
    std::vector<int> line(static_cast<std::size_t>(n), 0);
    std::vector<ShuffleRep> out;
    place_blocks(blocks, 0, 1, line, out);
    return out;
}

std::vector<ShuffleRep> shuffle_reps(int a, int b) { return multi_shuffle_reps({a, b}); }

PermGroup perm_group_of_wreath(const PermGroup& p, const PermGroup& g, int n) {
    if (p.degree() != n)
        throw Error(ErrorKind::DegreeMismatch, "permutation group degree differs from n");
    const int r = g.degree();
    auto embed = [&](const Permutation& sigma, const std::vector<const Permutation*>& gs) {
        std::vector<int> line(static_cast<std::size_t>(n * r));
        for (int k = 1; k <= n; ++k)
            for (int pt = 1; pt <= r; ++pt)
                line[static_cast<std::size_t>((k - 1) * r + pt - 1)] = (sigma(k) - 1) * r + (*gs[static_cast<std::size_t>(k - 1)])(pt);
        return Permutation(std::move(line));
    };
    std::vector<Permutation> elements;
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<const Permutation*> gs(static_cast<std::size_t>(n));
    for (const auto& sigma : p.elements()) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            for (int k = 0; k < n; ++k)
                gs[static_cast<std::size_t>(k)] = &g.elements()[idx[static_cast<std::size_t>(k)]];
            elements.push_back(embed(sigma, gs));
            int k = n - 1;
            while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == g.order())
                idx[static_cast<std::size_t>(k--)] = 0;
            if (k < 0)
                break;
        }
    }
    const Permutation id = Permutation::identity(r);
    std::vector<Permutation> gens;
    std::vector<const Permutation*> ids(static_cast<std::size_t>(n), &id);
    for (const auto& s : p.generators())
        gens.push_back(embed(s, ids));
    for (int k = 0; k < n; ++k)
        for (const auto& h : g.generators()) {
            auto slot = ids;
            slot[static_cast<std::size_t>(k)] = &h;
            gens.push_back(embed(Permutation::identity(n), slot));
        }
    return PermGroup(n * r, std::move(gens), std::move(elements));
}

PermGroup as_permutation_group(const MatrixGroup& g) {
    const int r0 = g.r0(), r1 = g.r1();
    auto convert = [&](const GradedGroupElement& e) {
        std::vector<int> line(static_cast<std::size_t>(r0 + r1));
        auto read = [&](const QMatrix& m, int offset) {
            for (std::size_t c = 0; c < m.cols(); ++c) {
                int hit = -1;
                for (std::size_t r = 0; r < m.rows(); ++r) {
                    if (m(r, c).is_zero())
                        continue;
                    if (!m(r, c).is_one() || hit >= 0)
                        throw Error(ErrorKind::NotAPermutationGroup, "element is not a permutation matrix");
                    hit = static_cast<int>(r);
                }
                if (hit < 0)
                    throw Error(ErrorKind::NotAPermutationGroup, "element is not a permutation matrix");
                line[static_cast<std::size_t>(offset) + c] = offset + hit + 1;
            }
        };
        read(e.g0, 0);
        read(e.g1, r0);
        return Permutation(std::move(line));
    };
    std::vector<Permutation> elements, gens;
    for (const auto& e : g.elements())
        elements.push_back(convert(e));
    for (const auto& e : g.generators())
        gens.push_back(convert(e));
    return PermGroup(r0 + r1, std::move(gens), std::move(elements));
}

LinearCharacter LinearCharacter::trivial(std::size_t order) {
    LinearCharacter chi;
    chi.values_.assign(order, 1);
    return chi;
}

LinearCharacter LinearCharacter::sign_character(const MatrixGroup& g) {
    LinearCharacter chi;
    for (const auto& e : g.elements()) {
        Rational d = g.r0() > 0 ? determinant(e.g0) : determinant(e.g1);
        if (d != Rational(1) && d != Rational(-1))
            throw Error(ErrorKind::InvalidCharacter, "determinant is not ±1");
        chi.values_.push_back(d.sign());
    }
    return chi;
}

LinearCharacter LinearCharacter::from_values(const std::vector<Rational>& values, const MatrixGroup& g) {
    if (values.size() != g.order())
        throw Error(ErrorKind::InvalidCharacter, "character length differs from group order");
    LinearCharacter chi;
    for (const auto& v : values) {
        if (v != Rational(1) && v != Rational(-1))
            throw Error(ErrorKind::InvalidCharacter, "character values must be ±1 over the rationals");
        chi.values_.push_back(v.sign());
    }
    const auto& el = g.elements();
    for (std::size_t a = 0; a < el.size(); ++a)
        for (std::size_t b = 0; b < el.size(); ++b) {
            std::size_t ab = *g.index_of(el[a] * el[b]);
            if (chi.values_[ab] != chi.values_[a] * chi.values_[b])
                throw Error(ErrorKind::InvalidCharacter, "character is not multiplicative");
        }
    return chi;
}

LinearCharacter LinearCharacter::from_wreath(const std::vector<WreathElement>& elements, Flavor flavor) {
    LinearCharacter chi;
    for (const auto& w : elements)
        chi.values_.push_back(flavor == Flavor::sgn ? wreath_sign(w) : 1);
    return chi;
}

}  // namespace superinv
