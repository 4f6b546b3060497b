#pragma once

#include <string>
#include <vector>

#include "superinv/group.hpp"

namespace superinv::fixtures {

MatrixGroup trivial(int r0, int r1);
// -1 acting on a single commuting variable.
MatrixGroup pm1();
MatrixGroup symmetric_on_even(int n);   // S_n permuting x_1..x_n
MatrixGroup symmetric_on_odd(int n);    // S_n permuting theta_1..theta_n
MatrixGroup symmetric_diagonal(int n);  // S_n permuting both
// Young subgroup S_alpha permuting theta_1..theta_{|alpha|}.
MatrixGroup young_on_exterior(const std::vector<int>& alpha);

struct NamedGroup {
    std::string name;
    MatrixGroup group;
    bool has_sign = false;  // whether the sign character is meaningful (a permutation action)
};

// Groups checked coefficientwise against the Reynolds oracle.
std::vector<NamedGroup> oracle_groups();

}  // namespace superinv::fixtures
