#pragma once

// Deterministic JSON and text renderings of the emitted artifacts.
// Every JSON document carries "schema": 1; rationals are "p/q" strings.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coxm06/linalg.hpp"
#include "coxm06/modspace.hpp"
#include "coxm06/relations.hpp"

namespace coxm06 {

inline constexpr int kSchemaVersion = 1;

/// {schema, kind: "relations", count, class_sizes, relations: [{index, class, degree, word, sign, text, terms}]}
nlohmann::json relations_to_json(const std::vector<RelationRecord>& records);
/// One line per relation: "<index> class <c> word <w> degree [..]: <polynomial>".
std::string relations_to_text(const std::vector<RelationRecord>& records);
/// Reads the JSON form back. Throws ParseError on malformed input or an unknown schema.
std::vector<RelationRecord> relations_from_json(const nlohmann::json& j);

/// which is "A" or "R"; throws Error otherwise.
nlohmann::json matrix_to_json(const std::string& which);
/// Aligned columns with a label header and one labelled line per row.
std::string matrix_to_text(const std::string& which);

nlohmann::json f_table_to_json(const std::vector<FTableRow>& rows);
std::string f_table_to_text(const std::vector<FTableRow>& rows);

/// The 24 torus coordinates and the 15 values f_pi at the lifted point.
nlohmann::json torus_point_to_json(const Rational& a, const Rational& b, const Rational& c, const TorusPoint& p);
std::string torus_point_to_text(const Rational& a, const Rational& b, const Rational& c, const TorusPoint& p);

}  // namespace coxm06
