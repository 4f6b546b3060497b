#pragma once

#include <string>

#include "json.hpp"

#include "superinv/group.hpp"
#include "superinv/molien.hpp"
#include "superinv/series.hpp"
#include "superinv/superpoly.hpp"
#include "superinv/symfunc.hpp"

namespace superinv {

using json = nlohmann::ordered_json;

Rational rational_from_json(const json& j);

json caps_to_json(const Caps& caps);
json series_to_json(const TrigradedSeries& s);
TrigradedSeries series_from_json(const json& j);

json poly_to_json(const SuperPolynomial& f);
SuperPolynomial poly_from_json(const json& j);

json matrix_group_to_json(const MatrixGroup& g);
MatrixGroup matrix_group_from_json(const json& j);

json perm_group_to_json(const PermGroup& p);
PermGroup perm_group_from_json(const json& j);

// "trivial" | "sgn" | {"values": [...]}
LinearCharacter character_from_json(const json& j, const MatrixGroup& g);

json symfunc_to_json(const SymFuncPoly& f);
SymFuncPoly symfunc_from_json(const json& j);

json molien_report_to_json(const MolienReport& r);

json read_json_file(const std::string& path);

}  // namespace superinv
