#include "coxm06/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "coxm06/errors.hpp"
#include "coxm06/picard.hpp"
#include "coxm06/variables.hpp"

namespace coxm06 {

namespace {

nlohmann::json degree_json(const DivisorClass& d) { return nlohmann::json(std::vector<long>(d.c.begin(), d.c.end())); }

std::string degree_text(const DivisorClass& d) {
  std::string s = "[";
  for (int i = 0; i < kPicardRank; ++i) s += (i ? " " : "") + std::to_string(d.c[i]);
  return s + "]";
}

void check_schema(const nlohmann::json& j, const char* kind) {
  if (!j.is_object() || j.value("schema", 0) != kSchemaVersion || j.value("kind", "") != kind)
    throw ParseError(std::string("expected a schema ") + std::to_string(kSchemaVersion) + " '" + kind + "' document");
}

IntMatrix matrix_named(const std::string& which, std::vector<std::string>& rows, std::vector<std::string>& cols) {
  if (which == "A") {
    rows.assign(picard_basis_labels().begin(), picard_basis_labels().end());
    cols = cox_column_labels();
    return build_A();
  }
  if (which == "R") {
    rows = torus_row_labels();
    cols = cox_column_labels();
    return build_R();
  }
  throw Error("unknown matrix '" + which + "' (expected A or R)");
}

}  // namespace

nlohmann::json relations_to_json(const std::vector<RelationRecord>& records) {
  std::array<std::size_t, 5> sizes{};
  nlohmann::json list = nlohmann::json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    ++sizes.at(r.cls - 1);
    list.push_back({{"index", i + 1},
                    {"class", r.cls},
                    {"degree", degree_json(r.degree)},
                    {"word", r.word},
                    {"sign", r.sign},
                    {"text", r.poly.to_text()},
                    {"terms", to_json(r.poly)}});
  }
  return {{"schema", kSchemaVersion},
          {"kind", "relations"},
          {"count", records.size()},
          {"class_sizes", sizes},
          {"relations", list}};
}

std::string relations_to_text(const std::vector<RelationRecord>& records) {
  std::ostringstream os;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    std::string w = r.word.empty() ? "e" : word_to_string(r.word);
    os << (i + 1) << " class " << r.cls << " word " << (r.sign < 0 ? "-" : "") << w << " degree "
       << degree_text(r.degree) << ": " << r.poly.to_text() << '\n';
  }
  return os.str();
}

std::vector<RelationRecord> relations_from_json(const nlohmann::json& j) {
  check_schema(j, "relations");
  std::vector<RelationRecord> out;
  try {
    for (const auto& e : j.at("relations")) {
      RelationRecord r;
      r.cls = e.at("class").get<int>();
      if (r.cls < 1 || r.cls > 5) throw ParseError("relation class out of range");
      r.poly = polynomial_from_json(e.at("terms"), Universe::Cox);
      auto deg = e.at("degree").get<std::vector<long>>();
      if (deg.size() != kPicardRank) throw ParseError("degree must have 16 entries");
      std::copy(deg.begin(), deg.end(), r.degree.c.begin());
      r.word = e.at("word").get<std::vector<int>>();
      r.sign = e.at("sign").get<int>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("malformed relations JSON: ") + ex.what());
  }
  if (out.size() != j.at("count").get<std::size_t>()) throw ParseError("relation count mismatch");
  return out;
}

nlohmann::json matrix_to_json(const std::string& which) {
  std::vector<std::string> rows, cols;
  IntMatrix m = matrix_named(which, rows, cols);
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<long> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c));
    entries.push_back(row);
  }
  return {{"schema", kSchemaVersion}, {"kind", "matrix"}, {"matrix", which},     {"rows", m.rows()},
          {"cols", m.cols()},         {"row_labels", rows}, {"column_labels", cols}, {"entries", entries}};
}

std::string matrix_to_text(const std::string& which) {
  std::vector<std::string> rows, cols;
  IntMatrix m = matrix_named(which, rows, cols);
  std::size_t lw = 0, cw = 2;
  for (const auto& s : rows) lw = std::max(lw, s.size());
  for (const auto& s : cols) cw = std::max(cw, s.size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) cw = std::max(cw, std::to_string(m.get(r, c)).size());
  auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  std::ostringstream os;
  os << std::string(lw, ' ');
  for (const auto& s : cols) os << ' ' << pad(s, cw);
  os << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << rows[r] << std::string(lw - rows[r].size(), ' ');
    for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << pad(std::to_string(m.get(r, c)), cw);
    os << '\n';
  }
  return os.str();
}

nlohmann::json f_table_to_json(const std::vector<FTableRow>& rows) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& r : rows) {
    const Matching& pi = kv_matchings()[r.pi];
    list.push_back({{"pi", matching_to_cycles(pi)},
                    {"variable", "u_" + matching_to_dotted(pi)},
                    {"f", f_pi(r.pi).to_text()},
                    {"word", r.word},
                    {"image", r.image.to_text()},
                    {"term", Polynomial::from_terms(Universe::Torus, {r.term}).to_text()},
                    {"exact", r.exact},
                    {"matches", r.matches}});
  }
  return {{"schema", kSchemaVersion}, {"kind", "f-table"}, {"count", rows.size()}, {"rows", list}};
}

std::string f_table_to_text(const std::vector<FTableRow>& rows) {
  std::ostringstream os;
  for (const auto& r : rows) {
    const Matching& pi = kv_matchings()[r.pi];
    os << "f_" << matching_to_dotted(pi) << " = " << f_pi(r.pi).to_text() << '\n';
  }
  return os.str();
}

nlohmann::json torus_point_to_json(const Rational& a, const Rational& b, const Rational& c, const TorusPoint& p) {
  auto labels = torus_row_labels();
  nlohmann::json coords = nlohmann::json::array(), fs = nlohmann::json::array();
  for (int i = 0; i < kNumTorusVariables; ++i)
    coords.push_back({{"name", labels[i]}, {"value", p.values[i].to_fraction_string()}});
  auto slots = p.slot_values();
  for (int k = 0; k < kNumKV; ++k)
    fs.push_back({{"pi", matching_to_dotted(kv_matchings()[k])},
                  {"value", evaluate_slots(f_pi(k), slots).to_fraction_string()}});
  return {{"schema", kSchemaVersion},
          {"kind", "torus-point"},
          {"parameters", {{"A", a.to_fraction_string()}, {"B", b.to_fraction_string()}, {"C", c.to_fraction_string()}}},
          {"coordinates", coords},
          {"f", fs}};
}

std::string torus_point_to_text(const Rational& a, const Rational& b, const Rational& c, const TorusPoint& p) {
  auto labels = torus_row_labels();
  std::ostringstream os;
  os << "A = " << a << ", B = " << b << ", C = " << c << '\n';
  for (int i = 0; i < kNumTorusVariables; ++i) os << labels[i] << " = " << p.values[i] << '\n';
  auto slots = p.slot_values();
  for (int k = 0; k < kNumKV; ++k)
    os << "f_" << matching_to_dotted(kv_matchings()[k]) << " = " << evaluate_slots(f_pi(k), slots) << '\n';
  return os.str();
}

}  // namespace coxm06
