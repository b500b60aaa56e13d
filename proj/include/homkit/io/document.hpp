#pragma once

#include "homkit/construct.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>

namespace homkit::io {

using Json = nlohmann::ordered_json;

/// Malformed document: wrong shape, wrong types or unreadable file.
class DocumentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline auto to_json(const Integer &a) -> Json {
  if (a.fits_slong_p()) return Json(a.get_si());
  return Json(a.get_str());
}

inline auto integer_from(const Json &j) -> Integer {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception &) {
    }
  }
  throw DocumentError("expected an integer, got " + j.dump());
}

inline auto to_json(const RingSpec &r) -> Json {
  if (r.is_integers()) return Json{{"integers", true}};
  return Json{{"mod", r.modulus()}};
}

inline auto ring_from(const Json &j) -> RingSpec {
  if (!j.is_object()) throw DocumentError("ring must be an object");
  if (j.contains("mod")) {
    auto n = integer_from(j.at("mod"));
    if (n < 2 || !n.fits_slong_p()) throw DocumentError("ring modulus must be at least 2");
    return RingSpec::integers_mod(n.get_si());
  }
  if (j.contains("integers") && j.at("integers") == true) return RingSpec::integers();
  throw DocumentError("ring must be {\"mod\": n} or {\"integers\": true}");
}

inline auto to_json(const FpModule &m) -> Json {
  Json out = Json::array();
  for (const auto &d : m.factors()) out.push_back(to_json(d));
  return out;
}

inline auto module_from(const RingSpec &r, const Json &j) -> FpModule {
  if (!j.is_array()) throw DocumentError("module must be a list of invariant factors");
  std::vector<Integer> f;
  for (const auto &e : j) f.push_back(integer_from(e));
  try {
    return FpModule::from_factors(r, std::move(f));
  } catch (const std::exception &e) {
    throw DocumentError(std::string("bad module ") + j.dump() + ": " + e.what());
  }
}

inline auto to_json(const IntMatrix &m) -> Json {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

/// Rows are target generators. An empty list stands for any shape with no
/// rows or no columns.
inline auto matrix_from(const Json &j, std::size_t rows, std::size_t cols) -> IntMatrix {
  if (!j.is_array()) throw DocumentError("matrix must be a list of rows");
  IntMatrix m(rows, cols);
  if (j.empty() && (rows == 0 || cols == 0)) return m;
  if (j.size() != rows) throw DocumentError("matrix " + j.dump() + " needs " + std::to_string(rows) + " rows");
  for (std::size_t i = 0; i < rows; ++i) {
    const auto &row = j[i];
    if (!row.is_array() || row.size() != cols)
      throw DocumentError("matrix row " + row.dump() + " needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from(row[c]);
  }
  return m;
}

inline auto degree_from(const std::string &key) -> int {
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(key, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != key.size() || key.empty()) throw DocumentError("degree '" + key + "' is not a decimal integer");
  return k;
}

inline auto to_json(const Complex &c) -> Json {
  Json mods = Json::object(), diff = Json::object();
  for (int k = c.lo(); k <= c.hi() && !c.is_zero(); ++k) {
    mods[std::to_string(k)] = to_json(c.component(k));
    if (k < c.hi()) diff[std::to_string(k)] = to_json(c.differential(k).matrix());
  }
  return Json{{"ring", to_json(c.ring())}, {"modules", mods}, {"diff", diff}};
}

/// Parses a complex. Ill-defined differentials raise std::invalid_argument;
/// d o d = 0 is left to validate.
inline auto complex_from(const Json &j) -> Complex {
  if (!j.is_object() || !j.contains("ring") || !j.contains("modules"))
    throw DocumentError("complex needs \"ring\" and \"modules\"");
  RingSpec r = ring_from(j.at("ring"));
  std::map<int, FpModule> comps;
  if (!j.at("modules").is_object()) throw DocumentError("\"modules\" must map degrees to factor lists");
  for (const auto &[key, v] : j.at("modules").items()) {
    auto m = module_from(r, v);
    if (!m.is_zero()) comps.emplace(degree_from(key), m);
  }
  auto at = [&](int k) { auto it = comps.find(k); return it == comps.end() ? FpModule::zero(r) : it->second; };
  std::map<int, IntMatrix> diffs;
  if (j.contains("diff")) {
    if (!j.at("diff").is_object()) throw DocumentError("\"diff\" must map degrees to matrices");
    for (const auto &[key, v] : j.at("diff").items()) {
      int k = degree_from(key);
      diffs.emplace(k, matrix_from(v, at(k + 1).rank(), at(k).rank()));
    }
  }
  return Complex::from_maps(r, comps, diffs);
}

inline auto to_json(const ModuleMap &f) -> Json {
  return Json{{"ring", to_json(f.source().ring())},
              {"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"matrix", to_json(f.matrix())}};
}

inline auto module_map_from(const Json &j) -> ModuleMap {
  RingSpec r = ring_from(j.at("ring"));
  auto s = module_from(r, j.at("source")), t = module_from(r, j.at("target"));
  return ModuleMap(s, t, matrix_from(j.at("matrix"), t.rank(), s.rank()));
}

inline auto to_json(const ChainMap &f) -> Json {
  Json m = Json::object();
  auto [lo, hi] = joint_range(f.source(), f.target());
  for (int k = lo; k <= hi; ++k) {
    auto c = f.component(k);
    if (c.source().is_zero() || c.target().is_zero()) continue;
    m[std::to_string(k)] = to_json(c.matrix());
  }
  return Json{{"ring", to_json(f.source().ring())},
              {"source", to_json(f.source())},
              {"target", to_json(f.target())},
              {"map", m}};
}

/// Reads a JSON file.
inline auto load(const std::filesystem::path &p) -> Json {
  std::ifstream in(p);
  if (!in) throw DocumentError("cannot read " + p.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error &e) {
    throw DocumentError(p.string() + ": " + e.what());
  }
}

/// An inline complex or a path to one, relative to base.
inline auto complex_ref(const Json &j, const std::filesystem::path &base) -> Complex {
  if (j.is_string()) return complex_from(load(base / j.get<std::string>()));
  return complex_from(j);
}

/// Parses a chain map; commutation is left to validate.
inline auto chain_map_from(const Json &j, const std::filesystem::path &base = {}) -> ChainMap {
  if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("map"))
    throw DocumentError("chain map needs \"source\", \"target\" and \"map\"");
  Complex s = complex_ref(j.at("source"), base), t = complex_ref(j.at("target"), base);
  if (!(s.ring() == t.ring())) throw DocumentError("chain map between complexes over different rings");
  if (j.contains("ring") && !(ring_from(j.at("ring")) == s.ring())) throw DocumentError("chain map ring mismatch");
  std::map<int, IntMatrix> ms;
  if (!j.at("map").is_object()) throw DocumentError("\"map\" must map degrees to matrices");
  for (const auto &[key, v] : j.at("map").items()) {
    int k = degree_from(key);
    ms.emplace(k, matrix_from(v, t.component(k).rank(), s.component(k).rank()));
  }
  return ChainMap::from_matrices(s, t, ms);
}

inline auto to_json(const Homotopy &h) -> Json {
  Json s = Json::object();
  for (const auto &[k, c] : h.components)
    if (!c.source().is_zero() && !c.target().is_zero()) s[std::to_string(k)] = to_json(c.matrix());
  return Json{{"ring", to_json(h.map.source().ring())}, {"chain_map", to_json(h.map)}, {"homotopy", s}};
}

inline auto homotopy_from(const Json &j, const std::filesystem::path &base = {}) -> Homotopy {
  Homotopy h;
  h.map = chain_map_from(j.at("chain_map"), base);
  if (!j.at("homotopy").is_object()) throw DocumentError("\"homotopy\" must map degrees to matrices");
  for (const auto &[key, v] : j.at("homotopy").items()) {
    int k = degree_from(key);
    auto s = h.map.source().component(k), t = h.map.target().component(k - 1);
    h.components.emplace(k, ModuleMap(s, t, matrix_from(v, t.rank(), s.rank())));
  }
  return h;
}

inline auto to_json(const Witness &w) -> Json {
  Json out{{"description", w.description}};
  if (!w.maps.empty()) {
    out["maps"] = Json::array();
    for (const auto &m : w.maps) out["maps"].push_back(to_json(m));
  }
  if (!w.chain_maps.empty()) {
    out["chain_maps"] = Json::array();
    for (const auto &m : w.chain_maps) out["chain_maps"].push_back(to_json(m));
  }
  if (!w.complexes.empty()) {
    out["complexes"] = Json::array();
    for (const auto &c : w.complexes) out["complexes"].push_back(to_json(c));
  }
  if (w.homotopy) out["homotopy"] = to_json(*w.homotopy);
  return out;
}

inline auto to_json(const Verdict &v) -> Json {
  Json out{{"verdict", to_string(v.status)}, {"universe", v.universe}, {"instances", v.instances}};
  if (v.counterexample) {
    out["counterexample"] = to_json(*v.counterexample);
    out["counterexample_confirmed"] = v.counterexample_confirmed;
  }
  if (!v.certificates.empty()) {
    out["certificates"] = Json::array();
    for (const auto &w : v.certificates) out["certificates"].push_back(to_json(w));
  }
  if (v.cross_check_agrees) out["cross_check_agrees"] = *v.cross_check_agrees;
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

inline auto to_json(const LinearSystem &s) -> Json {
  Json vars = Json::array(), eqs = Json::array();
  for (std::size_t v = 0; v < s.variable_count(); ++v) vars.push_back(to_json(s.variable_modulus(v)));
  for (const auto &e : s.equations()) {
    Json terms = Json::array();
    for (const auto &[v, c] : e.terms) terms.push_back(Json::array({v, to_json(c)}));
    eqs.push_back(Json{{"terms", terms}, {"rhs", to_json(e.rhs)}, {"modulus", to_json(e.modulus)}});
  }
  return Json{{"ring", to_json(s.ring())}, {"variable_moduli", vars}, {"equations", eqs}};
}

inline auto to_json(const BuildRecord &r) -> Json {
  Json chosen = Json::object();
  for (const auto &[name, m] : r.chosen) chosen[name] = to_json(m);
  return Json{{"step", r.step},
              {"variables", r.variables},
              {"equations", r.equations},
              {"solved", r.solved},
              {"chosen", chosen}};
}

inline auto to_json(const OracleCall &c) -> Json {
  return Json{{"degree", c.degree}, {"input", to_json(c.input)}, {"output", to_json(c.output)}, {"strategy", c.strategy}};
}

/// What a document holds, decided by its keys.
enum class DocumentKind { Complex, ChainMap, ModuleMap, Homotopy, Report, Unknown };

inline auto kind_of(const Json &j) -> DocumentKind {
  if (!j.is_object()) return DocumentKind::Unknown;
  if (j.contains("verdict") || j.contains("command")) return DocumentKind::Report;
  if (j.contains("homotopy") && j.contains("chain_map")) return DocumentKind::Homotopy;
  if (j.contains("map")) return DocumentKind::ChainMap;
  if (j.contains("matrix")) return DocumentKind::ModuleMap;
  if (j.contains("modules")) return DocumentKind::Complex;
  return DocumentKind::Unknown;
}

/// Outcome of validating a document: the first violation, if any.
struct DocumentCheck {
  bool valid = true;
  std::string violation;
  std::size_t objects = 0;
};

namespace detail {
inline void check_complex(const Complex &c, const std::string &where, DocumentCheck &out) {
  ++out.objects;
  auto v = validate(c);
  if (!v.valid && out.valid) {
    out.valid = false;
    out.violation = where + ": " + v.message;
  }
}

inline void fail(DocumentCheck &out, const std::string &msg) {
  if (!out.valid) return;
  out.valid = false;
  out.violation = msg;
}

inline void check_any(const Json &j, const std::filesystem::path &base, const std::string &where, DocumentCheck &out);

inline void check_chain_map(const ChainMap &f, const std::string &where, DocumentCheck &out) {
  check_complex(f.source(), where + " source", out);
  check_complex(f.target(), where + " target", out);
  ++out.objects;
  if (auto k = f.first_violation()) fail(out, where + ": chain map does not commute in degree " + std::to_string(*k));
}

inline void check_witness(const Json &w, const std::filesystem::path &base, const std::string &where,
                          DocumentCheck &out) {
  for (const char *key : {"maps", "chain_maps", "complexes"})
    if (w.contains(key))
      for (std::size_t i = 0; i < w.at(key).size(); ++i)
        check_any(w.at(key)[i], base, where + "." + key + "[" + std::to_string(i) + "]", out);
  if (w.contains("homotopy")) check_any(w.at("homotopy"), base, where + ".homotopy", out);
}

inline void check_any(const Json &j, const std::filesystem::path &base, const std::string &where, DocumentCheck &out) {
  try {
    switch (kind_of(j)) {
    case DocumentKind::Complex: check_complex(complex_from(j), where, out); break;
    case DocumentKind::ChainMap: check_chain_map(chain_map_from(j, base), where, out); break;
    case DocumentKind::ModuleMap:
      module_map_from(j);
      ++out.objects;
      break;
    case DocumentKind::Homotopy: {
      auto h = homotopy_from(j, base);
      check_chain_map(h.map, where, out);
      if (auto k = h.first_violation()) fail(out, where + ": homotopy identity fails in degree " + std::to_string(*k));
      break;
    }
    case DocumentKind::Report:
      for (const char *key : {"counterexample", "witness"})
        if (j.contains(key)) check_witness(j.at(key), base, where + "." + key, out);
      if (j.contains("certificates"))
        for (std::size_t i = 0; i < j.at("certificates").size(); ++i)
          check_witness(j.at("certificates")[i], base, where + ".certificates[" + std::to_string(i) + "]", out);
      if (j.contains("result")) check_any(j.at("result"), base, where + ".result", out);
      break;
    case DocumentKind::Unknown: throw DocumentError(where + ": unrecognized document");
    }
  } catch (const std::invalid_argument &e) {
    fail(out, where + ": " + e.what());
  }
}
} // namespace detail

/// Validates any document kind. Shape errors raise DocumentError; algebraic
/// violations (ill-defined maps, d o d != 0, non-commuting squares) are
/// reported in the result.
inline auto validate_document(const Json &j, const std::filesystem::path &base = {}) -> DocumentCheck {
  DocumentCheck out;
  try {
    detail::check_any(j, base, "document", out);
  } catch (const Json::exception &e) {
    throw DocumentError(e.what());
  }
  return out;
}

} // namespace homkit::io
