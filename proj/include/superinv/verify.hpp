#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superinv/json_io.hpp"

namespace superinv {

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    json detail;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool all_pass() const;
    json to_json() const;
};

// Suites: molien, wreath, collate, shuffle, identities, all.
const std::vector<std::string>& suite_names();
VerifyReport run_suite(const std::string& suite, std::uint64_t seed);

// The two worked shuffle examples, expected side assembled factor by factor.
bool signed_shuffle_worked_example();
bool unsigned_shuffle_worked_example();

}  // namespace superinv
