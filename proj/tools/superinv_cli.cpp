#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "superinv/errors.hpp"
#include "superinv/json_io.hpp"
#include "superinv/molien.hpp"
#include "superinv/shuffle.hpp"
#include "superinv/symfunc.hpp"
#include "superinv/verify.hpp"
#include "superinv/wreath_series.hpp"

using namespace superinv;

namespace {

enum Exit { ok = 0, mismatch = 1, input_error = 2 };

struct Options {
    std::string format = "json";
    std::string group, perm, expect, character = "trivial", flavor = "invariant", route, suite = "all";
    std::vector<std::string> inputs;
    int dq = 6, n = 1, N = 3;
    std::optional<int> du;
    bool check = false, signed_sum = false;
    std::uint64_t seed = 42;
};

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int emit_series(const TrigradedSeries& s, const Options& o) {
    if (o.format == "table")
        std::cout << render_table(s);
    else
        print(series_to_json(s));
    if (!o.expect.empty() && !(series_from_json(read_json_file(o.expect)) == s)) {
        std::cerr << "series differs from " << o.expect << '\n';
        return mismatch;
    }
    return ok;
}

LinearCharacter read_character(const std::string& spec, const MatrixGroup& g) {
    if (spec == "trivial" || spec == "sgn")
        return character_from_json(json(spec), g);
    if (!spec.empty() && spec[0] == '@')
        return character_from_json(read_json_file(spec.substr(1)), g);
    try {
        return character_from_json(json::parse(spec), g);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::Parse, std::string("character spec: ") + e.what());
    }
}

int run_molien(const Options& o) {
    const MatrixGroup g = matrix_group_from_json(read_json_file(o.group));
    const GroupAction action = GroupAction::of_group(g, read_character(o.character, g));
    if (o.check) {
        const MolienReport r = molien_vs_oracle(action, o.dq);
        print(molien_report_to_json(r));
        return r.ok() ? ok : mismatch;
    }
    return emit_series(super_molien(action, o.dq, o.du), o);
}

int run_cycle_index(const Options& o) {
    const PermGroup p = perm_group_from_json(read_json_file(o.perm));
    const SymFuncPoly z = cycle_index(p, parse_flavor(o.flavor));
    if (o.format == "table") {
        for (const auto& [l, c] : z.terms()) {
            std::cout << c.str() << "\tp";
            for (int part : l.parts())
                std::cout << '_' << part;
            std::cout << '\n';
        }
    } else {
        print(symfunc_to_json(z));
    }
    return ok;
}

int verdict(const char* name, const Options& o, const TrigradedSeries& a, const TrigradedSeries& b) {
    const bool match = a == b;
    print({{"theorem", name},
           {"flavor", o.flavor == "sgn" ? "sgn" : "invariant"},
           {"match", match},
           {"caps", caps_to_json(min_caps(a.caps(), b.caps()))}});
    return match ? ok : mismatch;
}

int run_wreath(const Options& o) {
    const PermGroup p = perm_group_from_json(read_json_file(o.perm));
    const MatrixGroup g = matrix_group_from_json(read_json_file(o.group));
    const Flavor f = parse_flavor(o.flavor);
    if (o.check)
        return verdict("wreath-plethysm", o, wreath_hilbert_direct(p, g, o.n, f, o.dq, o.du),
                       wreath_hilbert_plethysm(p, g, o.n, f, o.dq, o.du));
    if (o.route == "direct")
        return emit_series(wreath_hilbert_direct(p, g, o.n, f, o.dq, o.du), o);
    return emit_series(wreath_hilbert_plethysm(p, g, o.n, f, o.dq, o.du), o);
}

int run_collate(const Options& o) {
    CollationSpec spec{matrix_group_from_json(read_json_file(o.group)), o.N, o.dq, o.du.value_or(-1),
                       parse_flavor(o.flavor)};
    if (o.check)
        return verdict("collated-product", o, collated_sum_series(spec), collated_product_series(spec));
    if (o.route == "sum")
        return emit_series(collated_sum_series(spec), o);
    return emit_series(collated_product_series(spec), o);
}

int run_shuffle(const Options& o) {
    const SuperPolynomial a = poly_from_json(read_json_file(o.inputs.at(0)));
    const SuperPolynomial b = poly_from_json(read_json_file(o.inputs.at(1)));
    print(poly_to_json(shuffle_product(a, b, o.signed_sum)));
    return ok;
}

int run_verify(const Options& o) {
    const VerifyReport report = run_suite(o.suite, o.seed);
    if (o.format == "table") {
        for (const auto& c : report.checks)
            std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.suite << "  " << c.name << '\n';
    } else {
        print(report.to_json());
    }
    return report.all_pass() ? ok : mismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert series of superpolynomial invariants, wreath products and shuffle algebras"};
    app.require_subcommand(1);
    Options o;

    auto* molien = app.add_subcommand("molien", "Molien series of a matrix group with a linear character");
    molien->add_option("--group", o.group, "Matrix-group JSON file")->required()->check(CLI::ExistingFile);
    molien->add_option("--dq", o.dq, "q-degree cap")->check(CLI::NonNegativeNumber);
    molien->add_option("--du", o.du, "u-degree cap")->check(CLI::NonNegativeNumber);
    molien->add_option("--character", o.character, "trivial | sgn | JSON {\"values\":[...]} | @file");
    molien->add_flag("--check", o.check, "Compare every coefficient against the Reynolds oracle");
    molien->add_option("--expect", o.expect, "Series JSON to compare against")->check(CLI::ExistingFile);
    add_format(molien, o);

    auto* cyc = app.add_subcommand("cycle-index", "Cycle index of a permutation group");
    cyc->add_option("--perm", o.perm, "Permutation-group JSON file")->required()->check(CLI::ExistingFile);
    cyc->add_option("--flavor", o.flavor, "plain | sgn")->check(CLI::IsMember({"plain", "sgn"}));
    add_format(cyc, o);

    auto* wreath = app.add_subcommand("wreath", "Hilbert series of a wreath product P[G]");
    wreath->add_option("--perm", o.perm, "Permutation-group JSON file")->required()->check(CLI::ExistingFile);
    wreath->add_option("--group", o.group, "Matrix-group JSON file")->required()->check(CLI::ExistingFile);
    wreath->add_option("-n", o.n, "Number of tensor slots")->required()->check(CLI::PositiveNumber);
    wreath->add_option("--flavor", o.flavor, "invariant | sgn")->check(CLI::IsMember({"invariant", "sgn"}));
    wreath->add_option("--dq", o.dq, "q-degree cap")->check(CLI::NonNegativeNumber);
    wreath->add_option("--du", o.du, "u-degree cap")->check(CLI::NonNegativeNumber);
    wreath->add_option("--route", o.route, "direct | plethysm")->check(CLI::IsMember({"direct", "plethysm"}));
    wreath->add_flag("--check", o.check, "Compare the direct and plethysm routes");
    wreath->add_option("--expect", o.expect, "Series JSON to compare against")->check(CLI::ExistingFile);
    add_format(wreath, o);

    auto* collate = app.add_subcommand("collate", "Generating function over n of H(S_n[G])");
    collate->add_option("--group", o.group, "Matrix-group JSON file")->required()->check(CLI::ExistingFile);
    collate->add_option("-N", o.N, "t-degree cap")->check(CLI::NonNegativeNumber);
    collate->add_option("--dq", o.dq, "q-degree cap")->check(CLI::NonNegativeNumber);
    collate->add_option("--du", o.du, "u-degree cap")->check(CLI::NonNegativeNumber);
    collate->add_option("--flavor", o.flavor, "invariant | sgn")->check(CLI::IsMember({"invariant", "sgn"}));
    collate->add_option("--route", o.route, "sum | product")->check(CLI::IsMember({"sum", "product"}));
    collate->add_flag("--check", o.check, "Compare the sum and product forms");
    collate->add_option("--expect", o.expect, "Series JSON to compare against")->check(CLI::ExistingFile);
    add_format(collate, o);

    auto* shuffle = app.add_subcommand("shuffle", "Shuffle product of two superpolynomials");
    shuffle->add_option("inputs", o.inputs, "Two SuperPolynomial JSON files")
        ->required()
        ->expected(2)
        ->check(CLI::ExistingFile);
    shuffle->add_flag("--signed", o.signed_sum, "Use the signed shuffle");

    auto* verify = app.add_subcommand("verify", "Run a verification battery");
    verify->add_option("--suite", o.suite, "molien | wreath | collate | shuffle | identities | all")
        ->check(CLI::IsMember({"molien", "wreath", "collate", "shuffle", "identities", "all"}));
    verify->add_option("--seed", o.seed, "Seed for randomized checks");
    add_format(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : input_error;
    }

    try {
        if (*molien)
            return run_molien(o);
        if (*cyc)
            return run_cycle_index(o);
        if (*wreath)
            return run_wreath(o);
        if (*collate)
            return run_collate(o);
        if (*shuffle)
            return run_shuffle(o);
        return run_verify(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return input_error;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << '\n';
        return input_error;
    }
}
