#include "superinv/json_io.hpp"

#include <fstream>

#include "superinv/errors.hpp"

namespace superinv {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer())
        bad(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

QMatrix matrix_from_json(const json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw Error(ErrorKind::DimensionMismatch, "matrix must have " + std::to_string(dim) + " rows");
    QMatrix m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r) {
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw Error(ErrorKind::DimensionMismatch, "matrix row has wrong length");
        for (int c = 0; c < dim; ++c)
            m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = rational_from_json(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

json matrix_to_json(const QMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Rational rational_from_json(const json& j) {
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    bad("rational must be a string \"p/q\" or an integer");
}

json caps_to_json(const Caps& caps) { return {{"t", caps.t}, {"q", caps.q}, {"u", caps.u}}; }

json series_to_json(const TrigradedSeries& s) {
    json coeffs = json::array();
    for (const auto& [e, c] : s.terms())
        coeffs.push_back({{"t", e.t}, {"q", e.q}, {"u", e.u}, {"c", c.str()}});
    return {{"caps", caps_to_json(s.caps())}, {"coeffs", std::move(coeffs)}};
}

TrigradedSeries series_from_json(const json& j) {
    const json& caps = field(j, "caps");
    TrigradedSeries s(Caps{int_field(caps, "t"), int_field(caps, "q"), int_field(caps, "u")});
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array())
        bad("'coeffs' must be an array");
    for (const auto& c : coeffs) {
        Exponent e{int_field(c, "t"), int_field(c, "q"), int_field(c, "u")};
        if (!s.within_caps(e))
            throw Error(ErrorKind::CapExceeded, "coefficient outside the declared caps");
        s.add_term(e, rational_from_json(field(c, "c")));
    }
    return s;
}

json poly_to_json(const SuperPolynomial& f) {
    const AlgebraSignature sig = f.sig();
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json xs = json::array(), ts = json::array();
        for (std::size_t k = 0; k < m.x.size(); ++k)
            if (m.x[k])
                xs.push_back({static_cast<int>(k) / sig.r0 + 1, static_cast<int>(k) % sig.r0 + 1, m.x[k]});
        for (auto k : m.theta)
            ts.push_back({static_cast<int>(k) / sig.r1 + 1, static_cast<int>(k) % sig.r1 + 1});
        terms.push_back({{"x", std::move(xs)}, {"theta", std::move(ts)}, {"c", c.str()}});
    }
    return {{"sig", {{"r0", sig.r0}, {"r1", sig.r1}, {"n", sig.n}}}, {"terms", std::move(terms)}};
}

SuperPolynomial poly_from_json(const json& j) {
    const json& s = field(j, "sig");
    const AlgebraSignature sig{int_field(s, "r0"), int_field(s, "r1"), int_field(s, "n")};
    if (sig.r0 < 0 || sig.r1 < 0 || sig.n < 0)
        bad("negative signature");
    SuperPolynomial f(sig);
    const json& terms = field(j, "terms");
    if (!terms.is_array())
        bad("'terms' must be an array");
    for (const auto& t : terms) {
        std::vector<std::tuple<int, int, unsigned>> xs;
        std::vector<std::pair<int, int>> ts;
        for (const auto& x : field(t, "x")) {
            if (!x.is_array() || x.size() != 3 || x[2].get<int>() < 0)
                bad("x entries are [row, col, exp]");
            xs.emplace_back(x[0].get<int>(), x[1].get<int>(), x[2].get<unsigned>());
        }
        for (const auto& th : field(t, "theta")) {
            if (!th.is_array() || th.size() != 2)
                bad("theta entries are [row, col]");
            ts.emplace_back(th[0].get<int>(), th[1].get<int>());
        }
        f += SuperPolynomial::term(sig, rational_from_json(field(t, "c")), xs, ts);
    }
    return f;
}

json matrix_group_to_json(const MatrixGroup& g) {
    json gens = json::array();
    for (const auto& e : g.generators())
        gens.push_back({{"g0", matrix_to_json(e.g0)}, {"g1", matrix_to_json(e.g1)}});
    return {{"r0", g.r0()}, {"r1", g.r1()}, {"generators", std::move(gens)}};
}

MatrixGroup matrix_group_from_json(const json& j) {
    const int r0 = int_field(j, "r0"), r1 = int_field(j, "r1");
    if (r0 < 0 || r1 < 0)
        bad("negative dimension");
    std::vector<GradedGroupElement> gens;
    const json& list = field(j, "generators");
    if (!list.is_array())
        bad("'generators' must be an array");
    for (const auto& g : list) {
        GradedGroupElement e;
        e.g0 = g.contains("g0") ? matrix_from_json(g.at("g0"), r0) : QMatrix::identity(static_cast<std::size_t>(r0));
        e.g1 = g.contains("g1") ? matrix_from_json(g.at("g1"), r1) : QMatrix::identity(static_cast<std::size_t>(r1));
        gens.push_back(std::move(e));
    }
    return close_group(r0, r1, std::move(gens));
}

json perm_group_to_json(const PermGroup& p) {
    json gens = json::array();
    for (const auto& g : p.generators())
        gens.push_back(g.images());
    return {{"n", p.degree()}, {"generators", std::move(gens)}};
}

PermGroup perm_group_from_json(const json& j) {
    const int n = int_field(j, "n");
    if (n < 0)
        bad("negative degree");
    std::vector<Permutation> gens;
    for (const auto& g : field(j, "generators")) {
        if (!g.is_array() || static_cast<int>(g.size()) != n)
            throw Error(ErrorKind::DegreeMismatch, "generator length differs from n");
        gens.emplace_back(g.get<std::vector<int>>());
    }
    return close_perm_group(n, std::move(gens));
}

LinearCharacter character_from_json(const json& j, const MatrixGroup& g) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "trivial")
            return LinearCharacter::trivial(g.order());
        if (name == "sgn")
            return LinearCharacter::sign_character(g);
        throw Error(ErrorKind::InvalidCharacter, "unknown character '" + name + "'");
    }
    std::vector<Rational> values;
    for (const auto& v : field(j, "values"))
        values.push_back(rational_from_json(v));
    return LinearCharacter::from_values(values, g);
}

json symfunc_to_json(const SymFuncPoly& f) {
    json terms = json::array();
    for (const auto& [l, c] : f.terms())
        terms.push_back({{"lambda", l.parts()}, {"c", c.str()}});
    return {{"terms", std::move(terms)}};
}

SymFuncPoly symfunc_from_json(const json& j) {
    SymFuncPoly f;
    for (const auto& t : field(j, "terms"))
        f.add_term(Partition(field(t, "lambda").get<std::vector<int>>()), rational_from_json(field(t, "c")));
    return f;
}

json molien_report_to_json(const MolienReport& r) {
    json mism = json::array();
    for (const auto& m : r.mismatches)
        mism.push_back({{"i", m.i}, {"j", m.j}, {"molien", m.molien.str()}, {"oracle", m.oracle}});
    return {{"agreements", r.agreements}, {"mismatches", std::move(mism)}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

}  // namespace superinv
