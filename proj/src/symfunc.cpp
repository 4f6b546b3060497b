#include "superinv/symfunc.hpp"

#include "superinv/errors.hpp"

namespace superinv {

SymFuncPoly SymFuncPoly::constant(const Rational& c) { return p(Partition(), c); }

SymFuncPoly SymFuncPoly::p(const Partition& lambda, const Rational& c) {
    SymFuncPoly f;
    f.add_term(lambda, c);
    return f;
}

Rational SymFuncPoly::coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymFuncPoly::add_term(const Partition& lambda, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SymFuncPoly& SymFuncPoly::operator+=(const SymFuncPoly& o) {
    for (const auto& [l, c] : o.terms_)
        add_term(l, c);
    return *this;
}

SymFuncPoly& SymFuncPoly::operator-=(const SymFuncPoly& o) {
    for (const auto& [l, c] : o.terms_)
        add_term(l, -c);
    return *this;
}

SymFuncPoly& SymFuncPoly::operator*=(const Rational& s) {
    if (s.is_zero())
        terms_.clear();
    for (auto& kv : terms_)
        kv.second *= s;
    return *this;
}

SymFuncPoly operator*(const SymFuncPoly& a, const SymFuncPoly& b) {
    SymFuncPoly out;
    for (const auto& [la, ca] : a.terms_)
        for (const auto& [lb, cb] : b.terms_)
            out.add_term(la + lb, ca * cb);
    return out;
}

SymFuncPoly cycle_index(const PermGroup& p, const std::vector<int>& chi) {
    if (chi.size() != p.order())
        throw Error(ErrorKind::InvalidCharacter, "character length differs from group order");
    SymFuncPoly z;
    const Rational w(1, static_cast<long>(p.order()));
    for (std::size_t k = 0; k < p.order(); ++k)
        z.add_term(cycle_type(p.elements()[k]), chi[k] > 0 ? w : -w);
    return z;
}

SymFuncPoly cycle_index(const PermGroup& p, Flavor flavor) {
    std::vector<int> chi;
    for (const auto& s : p.elements())
        chi.push_back(flavor == Flavor::sgn ? perm_sign(s) : 1);
    return cycle_index(p, chi);
}

SymFuncPoly omega(const SymFuncPoly& f) {
    SymFuncPoly out;
    for (const auto& [l, c] : f.terms()) {
        int even_parts = 0;
        for (int part : l.parts())
            even_parts += part % 2 == 0;
        out.add_term(l, even_parts % 2 ? -c : c);
    }
    return out;
}

TrigradedSeries plethystic_substitute(const SymFuncPoly& f, const TrigradedSeries& s) {
    std::map<int, TrigradedSeries> scaled;
    auto power_sum = [&](int r) -> const TrigradedSeries& {
        auto it = scaled.find(r);
        if (it == scaled.end())
            it = scaled.emplace(r, scale_exponents(s, r)).first;
        return it->second;
    };
    TrigradedSeries out(s.caps());
    for (const auto& [l, c] : f.terms()) {
        TrigradedSeries term = TrigradedSeries::constant(c, s.caps());
        for (int part : l.parts())
            term = term * power_sum(part);
        out += term;
    }
    return out;
}

SymFuncPoly plethystic_compose(const SymFuncPoly& f, const SymFuncPoly& g) {
    std::map<int, SymFuncPoly> scaled;
    auto power_sum = [&](int r) -> const SymFuncPoly& {
        auto it = scaled.find(r);
        if (it == scaled.end()) {
            SymFuncPoly pr;
            for (const auto& [l, c] : g.terms()) {
                std::vector<int> parts = l.parts();
                for (int& part : parts)
                    part *= r;
                pr.add_term(Partition(std::move(parts)), c);
            }
            it = scaled.emplace(r, std::move(pr)).first;
        }
        return it->second;
    };
    SymFuncPoly out;
    for (const auto& [l, c] : f.terms()) {
        SymFuncPoly term = SymFuncPoly::constant(c);
        for (int part : l.parts())
            term = term * power_sum(part);
        out += term;
    }
    return out;
}

Rational z_lambda(const Partition& lambda) {
    std::map<int, long> mult;
    for (int part : lambda.parts())
        ++mult[part];
    mpz_class z = 1;
    for (const auto& [part, m] : mult) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
        z *= f * pw;
    }
    return Rational(z, mpz_class(1));
}

SymFuncPoly complete_homogeneous(int n) {
    SymFuncPoly h;
    for (const auto& l : partitions_of(n))
        h.add_term(l, z_lambda(l).inverse());
    return h;
}

SymFuncPoly elementary(int n) {
    SymFuncPoly e;
    for (const auto& l : partitions_of(n)) {
        Rational c = z_lambda(l).inverse();
        e.add_term(l, (n - l.length()) % 2 ? -c : c);
    }
    return e;
}

}  // namespace superinv
