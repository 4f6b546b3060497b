#include "superinv/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "superinv/errors.hpp"
#include "superinv/fixtures.hpp"
#include "superinv/shuffle.hpp"
#include "superinv/wreath_series.hpp"

namespace superinv {

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

json VerifyReport::to_json() const {
    json list = json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        passed += c.pass;
        list.push_back({{"suite", c.suite}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    return {{"suite", suite},
            {"seed", seed},
            {"passed", passed},
            {"failed", checks.size() - passed},
            {"all_pass", all_pass()},
            {"checks", std::move(list)}};
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"molien", "wreath", "collate", "shuffle", "identities"};
    return names;
}

bool signed_shuffle_worked_example() {
    const AlgebraSignature two{1, 1, 2}, four{1, 1, 4};
    const auto a = SuperPolynomial::term(two, 1, {{1, 1, 2}, {2, 1, 1}}, {{2, 1}});
    const auto b = SuperPolynomial::term(two, 1, {{1, 1, 5}, {2, 1, 7}}, {{1, 1}, {2, 1}});
    // Rows (p, q) carry x_p^2 x_q theta_q, rows (r, s) carry x_r^5 x_s^7 theta_r theta_s.
    const int rows[6][5] = {{1, 2, 3, 4, 1},  {1, 3, 2, 4, -1}, {1, 4, 2, 3, 1},
                            {2, 3, 1, 4, 1},  {2, 4, 1, 3, -1}, {3, 4, 1, 2, 1}};
    SuperPolynomial expected(four);
    for (const auto& r : rows) {
        auto left = SuperPolynomial::term(four, r[4], {{r[0], 1, 2}, {r[1], 1, 1}}, {{r[1], 1}});
        auto right = SuperPolynomial::term(four, 1, {{r[2], 1, 5}, {r[3], 1, 7}}, {{r[2], 1}, {r[3], 1}});
        expected += left * right;
    }
    return shuffle_product(a, b, true) == expected && expected.size() == 6;
}

bool unsigned_shuffle_worked_example() {
    const AlgebraSignature one{3, 2, 1}, two{3, 2, 2}, three{3, 2, 3};
    // Columns: x, y, z even; alpha, beta odd.
    const auto a = SuperPolynomial::term(one, 1, {{1, 1, 5}, {1, 2, 5}, {1, 3, 3}}, {{1, 1}});
    const auto b = SuperPolynomial::term(two, 1, {{1, 3, 1}}, {{2, 2}}) +
                   SuperPolynomial::term(two, 1, {{2, 3, 1}}, {{1, 2}});
    // x_k^5 y_k^5 z_k^3 z_m alpha_k beta_l
    const int rows[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    SuperPolynomial expected(three);
    for (const auto& r : rows)
        expected += SuperPolynomial::term(three, 1, {{r[0], 1, 5}, {r[0], 2, 5}, {r[0], 3, 3}, {r[1], 3, 1}},
                                          {{r[0], 1}, {r[2], 2}});
    return shuffle_product(a, b, false) == expected && expected.size() == 6;
}

namespace {

struct Runner {
    VerifyReport& report;
    std::string suite;

    void add(const std::string& name, bool pass, json detail = json::object()) {
        report.checks.push_back({suite, name, pass, std::move(detail)});
    }
    void add(const std::string& name, const BatteryCount& c) {
        add(name, c.ok(), {{"checks", c.checks}, {"failures", c.failures}});
    }
};

json series_detail(const TrigradedSeries& a, const TrigradedSeries& b) {
    return {{"caps", caps_to_json(min_caps(a.caps(), b.caps()))}, {"terms", a.terms().size()}};
}

TrigradedSeries collapse_to_t(const TrigradedSeries& s, int d) {
    TrigradedSeries out(Caps{d, 0, 0});
    for (const auto& [e, c] : s.terms())
        out.add_term({e.q + e.u, 0, 0}, c);
    return out;
}

void molien_suite(Runner& run) {
    for (const auto& fx : fixtures::oracle_groups()) {
        std::vector<std::pair<std::string, LinearCharacter>> chars{{"trivial", LinearCharacter::trivial(fx.group.order())}};
        if (fx.has_sign)
            chars.emplace_back("sgn", LinearCharacter::sign_character(fx.group));
        for (auto& [cname, chi] : chars) {
            MolienReport r = molien_vs_oracle(GroupAction::of_group(fx.group, chi), 6);
            run.add("molien-oracle/" + fx.name + "/" + cname, r.ok(), molien_report_to_json(r));
        }
    }
    // Setting u = 0 forgets the odd part.
    for (auto [name, g, stripped] :
         {std::make_tuple("trivial(2,2)", fixtures::trivial(2, 2), fixtures::trivial(2, 0)),
          std::make_tuple("S3-diagonal", fixtures::symmetric_diagonal(3), fixtures::symmetric_on_even(3)),
          std::make_tuple("S2-diagonal", fixtures::symmetric_diagonal(2), fixtures::symmetric_on_even(2))}) {
        TrigradedSeries full = truncate(super_molien(GroupAction::of_group(g), 8), {0, 8, 0});
        TrigradedSeries even = super_molien(GroupAction::of_group(stripped), 8);
        run.add(std::string("u-specialization/") + name, full == even);
    }
    for (int n = 1; n <= 3; ++n) {
        const MatrixGroup g = fixtures::symmetric_diagonal(n);
        const Caps caps{0, 8, n};
        for (Flavor f : {Flavor::invariant, Flavor::sgn}) {
            LinearCharacter chi = f == Flavor::sgn ? LinearCharacter::sign_character(g) : LinearCharacter::trivial(g.order());
            TrigradedSeries h = super_molien(GroupAction::of_group(g, chi), 8);
            TrigradedSeries prod = TrigradedSeries::one(caps);
            for (int i = 1; i <= n; ++i) {
                TrigradedSeries num(caps), den = TrigradedSeries::one(caps);
                // invariant: 1 + q^{i-1} u; sgn: u + q^{i-1}
                num.add_term({0, f == Flavor::invariant ? 0 : i - 1, 0}, 1);
                num.add_term({0, f == Flavor::invariant ? i - 1 : 0, 1}, 1);
                den.add_term({0, i, 0}, -1);
                prod = prod * num * series_inv(den);
            }
            run.add("diagonal-product-form/S" + std::to_string(n) + "/" + to_string(f), h == prod,
                    series_detail(h, prod));
        }
    }
}

void wreath_suite(Runner& run, std::uint64_t seed) {
    struct Case {
        std::string name;
        PermGroup p;
        MatrixGroup g;
        int n;
    };
    const std::vector<Case> cases{
        {"S2[pm1]", symmetric_group(2), fixtures::pm1(), 2},
        {"S3[pm1]", symmetric_group(3), fixtures::pm1(), 3},
        {"S2[S2-odd]", symmetric_group(2), fixtures::symmetric_on_odd(2), 2},
        {"Z3[trivial(1,1)]", cyclic_group(3), fixtures::trivial(1, 1), 3},
    };
    for (const auto& c : cases)
        for (Flavor f : {Flavor::invariant, Flavor::sgn}) {
            auto direct = wreath_hilbert_direct(c.p, c.g, c.n, f, 8);
            auto pleth = wreath_hilbert_plethysm(c.p, c.g, c.n, f, 8);
            run.add("wreath-plethysm/" + c.name + "/" + to_string(f), direct == pleth, series_detail(direct, pleth));
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dr(1, 3), dm(1, 4), num(-3, 3), den(1, 3);
    BatteryCount block_cycle;
    for (int k = 0; k < 50; ++k) {
        const int r = dr(rng), m = dm(rng);
        std::vector<QMatrix> blocks;
        for (int b = 0; b < m; ++b) {
            QMatrix a(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
            for (std::size_t x = 0; x < a.rows(); ++x)
                for (std::size_t y = 0; y < a.cols(); ++y) {
                    long p = num(rng);
                    a(x, y) = Rational(p, den(rng));
                }
            blocks.push_back(std::move(a));
        }
        ++block_cycle.checks;
        block_cycle.failures += !verify_block_cycle_determinant(blocks);
    }
    run.add("block-cycle-determinant", block_cycle);

    for (auto [name, g, m] : {std::make_tuple("pm1", fixtures::pm1(), 2), std::make_tuple("pm1", fixtures::pm1(), 3),
                              std::make_tuple("S2-odd", fixtures::symmetric_on_odd(2), 2)})
        run.add(std::string("m-cycle-average/") + name + "/m=" + std::to_string(m), verify_m_cycle_identity(g, m, 8));
}

void collate_suite(Runner& run) {
    const std::vector<std::pair<std::string, MatrixGroup>> groups{
        {"trivial(1,1)", fixtures::trivial(1, 1)},
        {"pm1", fixtures::pm1()},
        {"S(2,1)-exterior", fixtures::young_on_exterior({2, 1})},
    };
    for (const auto& [name, g] : groups)
        for (Flavor f : {Flavor::invariant, Flavor::sgn}) {
            CollationSpec spec{g, 3, 6, -1, f};
            auto sum = collated_sum_series(spec);
            auto prod = collated_product_series(spec);
            run.add("collated-product/" + name + "/" + to_string(f), sum == prod, series_detail(sum, prod));
        }
    const TrigradedSeries closed = young_exterior_closed_form(2, 3, 9);
    for (auto alpha : {std::vector<int>{2, 1}, std::vector<int>{1, 2}}) {
        CollationSpec spec{fixtures::young_on_exterior(alpha), 3, 0, 9, Flavor::invariant};
        auto sum = collated_sum_series(spec);
        run.add("young-exterior-closed-form/(" + std::to_string(alpha[0]) + "," + std::to_string(alpha[1]) + ")",
                sum == closed, series_detail(sum, closed));
    }
    for (auto [r0, r1] : {std::pair{1, 1}, std::pair{2, 1}})
        for (Flavor f : {Flavor::invariant, Flavor::sgn}) {
            CollationSpec spec{fixtures::trivial(r0, r1), 3, 5, -1, f};
            auto prod = collated_product_series(spec);
            auto closed_form = diagonal_closed_form(r0, r1, f, spec.caps());
            auto sum = collated_sum_series(spec);
            run.add("diagonal-closed-form/(" + std::to_string(r0) + "," + std::to_string(r1) + ")/" + to_string(f),
                    prod == closed_form && sum == closed_form, series_detail(prod, closed_form));
        }
}

void identities_suite(Runner& run) {
    for (Flavor f : {Flavor::invariant, Flavor::sgn}) {
        auto direct = superspace_direct(f, 3, 8);
        auto prod = superspace_product_form(f, 3, 8);
        auto qbin = superspace_qbinomial_form(f, 3, 8);
        run.add(std::string("superspace/product-form/") + to_string(f), direct == prod, series_detail(direct, prod));
        run.add(std::string("superspace/q-binomial-form/") + to_string(f), direct == qbin, series_detail(direct, qbin));
    }

    const std::vector<std::pair<std::string, PermGroup>> perms{
        {"S2", symmetric_group(2)}, {"S3", symmetric_group(3)},          {"S4", symmetric_group(4)},
        {"Z3", cyclic_group(3)},    {"S(2,1)", young_subgroup({2, 1})}, {"Z4", cyclic_group(4)},
    };
    for (const auto& [name, p] : perms)
        run.add("omega-cycle-index/" + name, omega(cycle_index(p)) == cycle_index(p, Flavor::sgn));

    for (int n = 1; n <= 5; ++n) {
        SymFuncPoly acc;
        for (int k = 0; k <= n; ++k)
            acc += elementary(k) * complete_homogeneous(n - k) * Rational(k % 2 ? -1 : 1);
        bool enumerated = complete_homogeneous(n) == cycle_index(symmetric_group(n)) &&
                          elementary(n) == cycle_index(symmetric_group(n), Flavor::sgn);
        run.add("alternating-e-h-sum/n=" + std::to_string(n), acc.terms().empty() && enumerated);
    }

    for (auto [pn, gn, order] : {std::make_tuple(2, 2, 8), std::make_tuple(2, 3, 72), std::make_tuple(3, 2, 48)}) {
        const PermGroup p = symmetric_group(pn), g = symmetric_group(gn);
        const PermGroup w = perm_group_of_wreath(p, g, pn);
        const bool ok = static_cast<int>(w.order()) == order &&
                        cycle_index(w) == plethystic_compose(cycle_index(p), cycle_index(g));
        run.add("polya-composition/S" + std::to_string(pn) + "[S" + std::to_string(gn) + "]", ok,
                {{"order", w.order()}});
    }

    {
        // Composition then substitution equals nested substitution.
        const Caps caps{4, 6, 2};
        TrigradedSeries s(caps);
        const TrigradedSeries base = super_molien(GroupAction::of_group(fixtures::trivial(1, 1)), 6, 2);
        for (const auto& [e, c] : base.terms())
            s.add_term({1, e.q, e.u}, c);
        const SymFuncPoly f = cycle_index(symmetric_group(2)), g = cycle_index(cyclic_group(2), Flavor::sgn);
        run.add("plethysm-composition-compatibility",
                plethystic_substitute(plethystic_compose(f, g), s) ==
                    plethystic_substitute(f, plethystic_substitute(g, s)));
    }

    for (auto [r0, r1] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{1, 1}, std::pair{2, 3}, std::pair{3, 2}}) {
        const int d = 8;
        TrigradedSeries sym = collapse_to_t(super_molien(GroupAction::of_group(fixtures::trivial(r0, r1)), d), d);
        TrigradedSeries ext = collapse_to_t(super_molien(GroupAction::of_group(fixtures::trivial(r1, r0)), d), d);
        run.add("koszul-hilbert-identity/(" + std::to_string(r0) + "," + std::to_string(r1) + ")",
                ext * flip_t(sym) == TrigradedSeries::one(sym.caps()));
    }
}

void shuffle_suite(Runner& run, std::uint64_t seed) {
    const std::vector<std::pair<std::string, MatrixGroup>> groups{
        {"trivial(1,1)", fixtures::trivial(1, 1)},
        {"trivial(1,0)", fixtures::trivial(1, 0)},
        {"trivial(0,1)", fixtures::trivial(0, 1)},
        {"pm1", fixtures::pm1()},
    };
    for (const auto& [name, g] : groups)
        for (Flavor f : {Flavor::invariant, Flavor::sgn}) {
            const std::string tag = name + "/" + to_string(f);
            InvariantBasisCache cache(g, f);
            run.add("closure/" + tag, closure_battery(cache, 4, 4));
            run.add("associativity/" + tag, associativity_battery(cache, 4, 30, seed));
            run.add("degree-one-generation/" + tag, generation_battery(g, f, 3, 4));
        }
    run.add("supercommutation/(1,1)", supercommutation_battery(1, 1));
    run.add("supercommutation/(2,2)", supercommutation_battery(2, 2));
    run.add("worked-example/signed-2-2", signed_shuffle_worked_example());
    run.add("worked-example/unsigned-1-2", unsigned_shuffle_worked_example());
}

}  // namespace

VerifyReport run_suite(const std::string& suite, std::uint64_t seed) {
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end())
        throw Error(ErrorKind::Parse, "unknown suite '" + suite + "'");
    VerifyReport report;
    report.suite = suite;
    report.seed = seed;
    auto wanted = [&](const char* s) { return suite == "all" || suite == s; };
    if (wanted("molien")) {
        Runner r{report, "molien"};
        molien_suite(r);
    }
    if (wanted("wreath")) {
        Runner r{report, "wreath"};
        wreath_suite(r, seed);
    }
    if (wanted("collate")) {
        Runner r{report, "collate"};
        collate_suite(r);
    }
    if (wanted("identities")) {
        Runner r{report, "identities"};
        identities_suite(r);
    }
    if (wanted("shuffle")) {
        Runner r{report, "shuffle"};
        shuffle_suite(r, seed);
    }
    return report;
}

}  // namespace superinv
