#include "mtkit/json_io.hpp"

#include <json.hpp>

namespace mtkit {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw SchemaError("/", "not valid JSON");
  if (!doc.is_object()) throw SchemaError("/", "document must be an object");
  return doc;
}

std::string kind_of(const json& doc) {
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw SchemaError("/kind", "missing or non-string");
  return doc["kind"].get<std::string>();
}

int int_field(const json& doc, const char* name) {
  if (!doc.contains(name) || !doc[name].is_number_integer())
    throw SchemaError(std::string("/") + name, "missing or non-integer");
  return doc[name].get<int>();
}

FinSpace space_from_json(const json& doc) {
  const int n = int_field(doc, "points");
  if (n < 0) throw SchemaError("/points", "must be nonnegative");
  if (!doc.contains("opens") || !doc["opens"].is_array())
    throw SchemaError("/opens", "missing or non-array");
  std::vector<std::vector<int>> opens;
  std::size_t i = 0;
  for (const auto& entry : doc["opens"]) {
    const std::string path = "/opens/" + std::to_string(i++);
    if (!entry.is_array()) throw SchemaError(path, "open set must be an array");
    std::vector<int> pts;
    for (const auto& p : entry) {
      if (!p.is_number_integer()) throw SchemaError(path, "point index must be an integer");
      const int v = p.get<int>();
      if (v < 0 || v >= n) throw SchemaError(path, "point index out of range");
      pts.push_back(v);
    }
    opens.push_back(std::move(pts));
  }
  return validate_space_from_sets(n, opens);
}

std::pair<int, std::vector<std::pair<int, int>>> leq_from_json(const json& doc) {
  const int m = int_field(doc, "elements");
  if (m <= 0) throw SchemaError("/elements", "must be positive");
  if (!doc.contains("leq") || !doc["leq"].is_array())
    throw SchemaError("/leq", "missing or non-array");
  std::vector<std::pair<int, int>> pairs;
  std::size_t i = 0;
  for (const auto& entry : doc["leq"]) {
    const std::string path = "/leq/" + std::to_string(i++);
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
        !entry[1].is_number_integer())
      throw SchemaError(path, "relation entry must be a pair of integers");
    const int a = entry[0].get<int>();
    const int b = entry[1].get<int>();
    if (a < 0 || a >= m || b < 0 || b >= m)
      throw SchemaError(path, "element index out of range");
    pairs.emplace_back(a, b);
  }
  return {m, std::move(pairs)};
}

}  // namespace

ParsedDocument parse_document(const std::string& json_text) {
  const json doc = parse_or_throw(json_text);
  const std::string kind = kind_of(doc);
  if (kind == "space") return space_from_json(doc);
  if (kind == "lattice") {
    auto [m, pairs] = leq_from_json(doc);
    return validate_lattice_from_pairs(m, pairs);
  }
  throw SchemaError("/kind", "unknown kind '" + kind + "'");
}

FinSpace parse_space_document(const std::string& json_text) {
  const json doc = parse_or_throw(json_text);
  if (kind_of(doc) != "space") throw SchemaError("/kind", "expected 'space'");
  return space_from_json(doc);
}

FiniteLattice parse_lattice_document(const std::string& json_text) {
  const json doc = parse_or_throw(json_text);
  if (kind_of(doc) != "lattice") throw SchemaError("/kind", "expected 'lattice'");
  auto [m, pairs] = leq_from_json(doc);
  return validate_lattice_from_pairs(m, pairs);
}

FinPoset parse_poset_document(const std::string& json_text) {
  const json doc = parse_or_throw(json_text);
  if (kind_of(doc) != "lattice") throw SchemaError("/kind", "expected 'lattice'");
  auto [m, pairs] = leq_from_json(doc);
  return validate_poset_from_pairs(m, pairs);
}

std::string serialize_space(const FinSpace& space) {
  json doc;
  doc["kind"] = "space";
  doc["points"] = space.points();
  json opens = json::array();
  for (Mask u : space.opens()) opens.push_back(mask_points(u));
  doc["opens"] = std::move(opens);
  return doc.dump();
}

std::string serialize_lattice(const FiniteLattice& lattice) {
  json doc;
  doc["kind"] = "lattice";
  doc["elements"] = lattice.size();
  json leq = json::array();
  for (int a = 0; a < lattice.size(); ++a)
    for (int b = 0; b < lattice.size(); ++b)
      if (lattice.le(a, b)) leq.push_back(json::array({a, b}));
  doc["leq"] = std::move(leq);
  return doc.dump();
}

}  // namespace mtkit
