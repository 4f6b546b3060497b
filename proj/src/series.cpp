#include "superinv/series.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "superinv/errors.hpp"

namespace superinv {

Caps min_caps(const Caps& a, const Caps& b) {
    return {std::min(a.t, b.t), std::min(a.q, b.q), std::min(a.u, b.u)};
}

TrigradedSeries::TrigradedSeries(Caps caps) : caps_(caps) {
    if (caps.t < 0 || caps.q < 0 || caps.u < 0)
        throw Error(ErrorKind::Domain, "negative truncation cap");
}

TrigradedSeries TrigradedSeries::constant(const Rational& c, Caps caps) {
    return monomial(c, {0, 0, 0}, caps);
}

TrigradedSeries TrigradedSeries::monomial(const Rational& c, Exponent e, Caps caps) {
    TrigradedSeries s(caps);
    s.add_term(e, c);
    return s;
}

TrigradedSeries TrigradedSeries::from_unipoly(const UniPoly& p, Var var, Caps caps) {
    TrigradedSeries s(caps);
    for (int k = 0; k <= p.degree(); ++k) {
        Exponent e{var == Var::t ? k : 0, var == Var::q ? k : 0, var == Var::u ? k : 0};
        s.add_term(e, p.coeff(static_cast<std::size_t>(k)));
    }
    return s;
}

bool TrigradedSeries::within_caps(const Exponent& e) const {
    return e.t >= 0 && e.q >= 0 && e.u >= 0 && e.t <= caps_.t && e.q <= caps_.q && e.u <= caps_.u;
}

Rational TrigradedSeries::coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TrigradedSeries::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero() || !within_caps(e))
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TrigradedSeries& TrigradedSeries::operator+=(const TrigradedSeries& o) {
    caps_ = min_caps(caps_, o.caps_);
    std::erase_if(terms_, [&](const auto& kv) { return !within_caps(kv.first); });
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

TrigradedSeries& TrigradedSeries::operator-=(const TrigradedSeries& o) {
    caps_ = min_caps(caps_, o.caps_);
    std::erase_if(terms_, [&](const auto& kv) { return !within_caps(kv.first); });
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

TrigradedSeries& TrigradedSeries::operator*=(const Rational& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_)
        kv.second *= s;
    return *this;
}

TrigradedSeries operator*(const TrigradedSeries& a, const TrigradedSeries& b) {
    TrigradedSeries out(min_caps(a.caps_, b.caps_));
    for (const auto& [ea, ca] : a.terms_) {
        if (!out.within_caps(ea))
            continue;
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea.t + eb.t, ea.q + eb.q, ea.u + eb.u}, ca * cb);
    }
    return out;
}

bool operator==(const TrigradedSeries& a, const TrigradedSeries& b) {
    TrigradedSeries d = a - b;
    return d.is_zero();
}

TrigradedSeries series_inv(const TrigradedSeries& s) {
    const Rational a0 = s.coeff({0, 0, 0});
    if (a0.is_zero())
        throw Error(ErrorKind::ZeroConstantTerm, "series has no inverse");
    const Caps caps = s.caps();
    const Rational inv0 = a0.inverse();
    std::vector<std::pair<Exponent, Rational>> rest;
    for (const auto& kv : s.terms())
        if (kv.first != Exponent{0, 0, 0})
            rest.push_back(kv);
    // Lexicographic sweep: every proper divisor of e is visited before e.
    TrigradedSeries out(caps);
    for (int t = 0; t <= caps.t; ++t)
        for (int q = 0; q <= caps.q; ++q)
            for (int u = 0; u <= caps.u; ++u) {
                Exponent e{t, q, u};
                if (e == Exponent{0, 0, 0}) {
                    out.add_term(e, inv0);
                    continue;
                }
                Rational acc;
                for (const auto& [k, c] : rest) {
                    if (k.t > t || k.q > q || k.u > u)
                        continue;
                    Rational b = out.coeff({t - k.t, q - k.q, u - k.u});
                    if (!b.is_zero())
                        acc += c * b;
                }
                if (!acc.is_zero())
                    out.add_term(e, -acc * inv0);
            }
    return out;
}

TrigradedSeries series_pow_int(const TrigradedSeries& s, long k) {
    if (k < 0)
        return series_pow_int(series_inv(s), -k);
    TrigradedSeries result = TrigradedSeries::one(s.caps());
    TrigradedSeries base = s;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k)
            base = base * base;
    }
    return result;
}

TrigradedSeries flip_u(const TrigradedSeries& s) {
    TrigradedSeries out(s.caps());
    for (const auto& [e, c] : s.terms())
        out.add_term(e, e.u % 2 ? -c : c);
    return out;
}

TrigradedSeries flip_t(const TrigradedSeries& s) {
    TrigradedSeries out(s.caps());
    for (const auto& [e, c] : s.terms())
        out.add_term(e, e.t % 2 ? -c : c);
    return out;
}

TrigradedSeries scale_exponents(const TrigradedSeries& s, int r) {
    TrigradedSeries out(s.caps());
    for (const auto& [e, c] : s.terms())
        out.add_term({e.t * r, e.q * r, e.u * r}, c);
    return out;
}

TrigradedSeries truncate(const TrigradedSeries& s, Caps caps) {
    if (caps.t > s.caps().t || caps.q > s.caps().q || caps.u > s.caps().u)
        throw Error(ErrorKind::CapExceeded, "truncation cannot raise caps");
    TrigradedSeries out(caps);
    for (const auto& [e, c] : s.terms())
        out.add_term(e, c);
    return out;
}

std::string render_table(const TrigradedSeries& s) {
    const Caps caps = s.caps();
    std::ostringstream os;
    for (int t = 0; t <= caps.t; ++t) {
        std::vector<std::vector<std::string>> cells(caps.q + 1, std::vector<std::string>(caps.u + 1));
        std::size_t width = 1;
        for (int q = 0; q <= caps.q; ++q)
            for (int u = 0; u <= caps.u; ++u) {
                cells[q][u] = s.coeff({t, q, u}).str();
                width = std::max(width, cells[q][u].size());
            }
        std::size_t label = std::to_string(caps.q).size() + 2;
        os << "t^" << t << '\n';
        os << std::string(label, ' ');
        for (int u = 0; u <= caps.u; ++u) {
            std::string h = "u" + std::to_string(u);
            os << ' ' << std::string(width > h.size() ? width - h.size() : 0, ' ') << h;
        }
        os << '\n';
        for (int q = 0; q <= caps.q; ++q) {
            std::string l = "q" + std::to_string(q);
            os << l << std::string(label - l.size(), ' ');
            for (int u = 0; u <= caps.u; ++u) {
                const std::string& c = cells[q][u];
                std::size_t w = std::max(width, ("u" + std::to_string(u)).size());
                os << ' ' << std::string(w - c.size(), ' ') << c;
            }
            os << '\n';
        }
    }
    return os.str();
}

}  // namespace superinv
