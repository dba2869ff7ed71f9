#pragma once

// Quiver documents (JSON). Parsing checks the quiver itself; weights and
// parameters are only required to be well-formed here and are validated by
// WeightedPresentation::make.

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wsa/presentation.hpp"

namespace wsa {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& require_field(const Json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw Error(ErrorKind::InvalidDocument, where + " is missing '" + key + "'");
  return *it;
}

inline void reject_unknown(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw Error(ErrorKind::InvalidDocument, where + " must be an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || it.key() == k;
    if (!ok) throw Error(ErrorKind::InvalidDocument, where + " has unknown field '" + it.key() + "'");
  }
}

inline std::string require_string(const Json& v, const std::string& where) {
  if (!v.is_string()) throw Error(ErrorKind::InvalidDocument, where + " must be a string");
  return v.get<std::string>();
}

inline Rational parse_scalar(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(v.dump(), 10);
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw Error(ErrorKind::InvalidScalar, where + " must be an integer or a \"num/den\" string");
}

inline Json scalar_to_json(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(rational_to_string(q));
}

}  // namespace detail

/// Parse a document. `field_override` replaces the document's field.
inline PresentationData parse_document(const Json& doc, std::optional<FieldSpec> field_override = std::nullopt) {
  using namespace detail;
  reject_unknown(doc, {"vertices", "arrows", "f", "weights", "parameters", "field"}, "document");

  std::vector<std::string> vertices;
  const auto& jv = require_field(doc, "vertices", "document");
  if (!jv.is_array()) throw Error(ErrorKind::InvalidDocument, "'vertices' must be a list");
  for (const auto& v : jv) vertices.push_back(require_string(v, "vertex"));

  std::vector<ArrowSpec> arrows;
  const auto& ja = require_field(doc, "arrows", "document");
  if (!ja.is_array()) throw Error(ErrorKind::InvalidDocument, "'arrows' must be a list");
  for (const auto& a : ja) {
    reject_unknown(a, {"id", "source", "target"}, "arrow");
    arrows.push_back({require_string(require_field(a, "id", "arrow"), "arrow id"),
                      require_string(require_field(a, "source", "arrow"), "arrow source"),
                      require_string(require_field(a, "target", "arrow"), "arrow target")});
  }

  std::vector<std::vector<std::string>> f_cycles;
  const auto& jf = require_field(doc, "f", "document");
  if (!jf.is_array()) throw Error(ErrorKind::InvalidDocument, "'f' must be a list of cycles");
  for (const auto& cyc : jf) {
    if (!cyc.is_array()) throw Error(ErrorKind::InvalidDocument, "each f-cycle must be a list");
    std::vector<std::string> names;
    for (const auto& x : cyc) names.push_back(require_string(x, "f-cycle entry"));
    f_cycles.push_back(std::move(names));
  }

  PresentationData data{TriangulationQuiver::build(std::move(vertices), std::move(arrows), f_cycles), {}, {}, {}};
  const auto& q = data.quiver;
  const auto& g = q.g_cycles();

  auto cycle_of = [&](const Json& entry, const std::string& where) {
    const auto name = require_string(require_field(entry, "g_cycle_representative", where), where);
    auto a = q.find_arrow(name);
    if (!a) throw Error(ErrorKind::InvalidDocument, where + " names unknown arrow '" + name + "'");
    return g.cycle_index(*a);
  };

  data.m.assign(g.size(), 0);
  std::vector<char> seen(g.size(), 0);
  const auto& jw = require_field(doc, "weights", "document");
  if (!jw.is_array()) throw Error(ErrorKind::InvalidDocument, "'weights' must be a list");
  for (const auto& w : jw) {
    reject_unknown(w, {"g_cycle_representative", "m"}, "weight");
    const int k = cycle_of(w, "weight");
    if (seen[k]++) throw Error(ErrorKind::InvalidWeights, "two weights for g-cycle of " + q.arrow_name(g.cycles()[k].front()));
    const auto& m = require_field(w, "m", "weight");
    if (!m.is_number_integer() || m.get<long long>() < 1 || m.get<long long>() > 1000000)
      throw Error(ErrorKind::InvalidWeights, "weight of g-cycle " + q.arrow_name(g.cycles()[k].front()) + " must be a positive integer");
    data.m[k] = m.get<int>();
  }
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!seen[k]) throw Error(ErrorKind::InvalidWeights, "no weight for g-cycle of " + q.arrow_name(g.cycles()[k].front()));

  data.c.assign(g.size(), Rational(0));
  seen.assign(g.size(), 0);
  const auto& jp = require_field(doc, "parameters", "document");
  if (!jp.is_array()) throw Error(ErrorKind::InvalidDocument, "'parameters' must be a list");
  for (const auto& c : jp) {
    reject_unknown(c, {"g_cycle_representative", "c"}, "parameter");
    const int k = cycle_of(c, "parameter");
    if (seen[k]++) throw Error(ErrorKind::InvalidDocument, "two parameters for g-cycle of " + q.arrow_name(g.cycles()[k].front()));
    data.c[k] = parse_scalar(require_field(c, "c", "parameter"), "parameter c");
    if (sgn(data.c[k]) == 0) throw Error(ErrorKind::InvalidScalar, "parameter of g-cycle " + q.arrow_name(g.cycles()[k].front()) + " is zero");
  }
  for (std::size_t k = 0; k < g.size(); ++k)
    if (!seen[k]) throw Error(ErrorKind::InvalidDocument, "no parameter for g-cycle of " + q.arrow_name(g.cycles()[k].front()));

  if (auto it = doc.find("field"); it != doc.end()) {
    if (!it->is_number_integer()) throw Error(ErrorKind::InvalidScalar, "'field' must be an integer characteristic");
    data.field = FieldSpec::make(it->get<long long>());
  }
  if (field_override) data.field = *field_override;
  return data;
}

inline PresentationData parse_document_text(const std::string& text, std::optional<FieldSpec> field_override = std::nullopt) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidDocument, e.what());
  }
  return parse_document(doc, field_override);
}

inline PresentationData load_document(const std::string& path, std::optional<FieldSpec> field_override = std::nullopt) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidDocument, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document_text(ss.str(), field_override);
}

/// Canonical form: vertices and arrows sorted, cycles rotated to start at
/// their smallest arrow, representatives are smallest arrows of g-cycles.
inline Json to_json(const PresentationData& d) {
  const auto& q = d.quiver;
  Json doc = Json::object();
  doc["vertices"] = q.vertex_names();
  Json arrows = Json::array();
  for (const auto& a : q.arrow_specs()) arrows.push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
  doc["arrows"] = arrows;
  doc["f"] = q.f_cycle_names();
  Json weights = Json::array(), params = Json::array();
  for (std::size_t k = 0; k < q.g_cycles().size(); ++k) {
    const auto& rep = q.arrow_name(q.g_cycles().cycles()[k].front());
    weights.push_back({{"g_cycle_representative", rep}, {"m", d.m[k]}});
    params.push_back({{"g_cycle_representative", rep}, {"c", detail::scalar_to_json(d.c[k])}});
  }
  doc["weights"] = weights;
  doc["parameters"] = params;
  doc["field"] = d.field.characteristic;
  return doc;
}

inline std::string to_document_text(const PresentationData& d) { return to_json(d).dump(2) + "\n"; }

}  // namespace wsa
