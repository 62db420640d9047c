#include "wallcross/config.hpp"

#include <fstream>
#include <set>

namespace wallcross {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) {
  throw Error(ErrorKind::ConfigError, message);
}

void only_keys(const json& obj, const std::string& where,
               const std::set<std::string>& allowed) {
  if (!obj.is_object()) fail(where + " must be an object");
  for (const auto& [key, value] : obj.items())
    if (!allowed.count(key)) fail("unknown key '" + key + "' in " + where);
}

const json& require(const json& obj, const std::string& where,
                    const std::string& key) {
  if (!obj.contains(key)) fail("missing key '" + key + "' in " + where);
  return obj.at(key);
}

std::int64_t as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(what + " must be an integer");
  return v.get<std::int64_t>();
}

IntVector as_vector(const json& v, const std::string& what, int length) {
  if (!v.is_array()) fail(what + " must be an array of integers");
  if (static_cast<int>(v.size()) != length)
    fail(what + " must have length b2 = " + std::to_string(length));
  IntVector out(length);
  for (int i = 0; i < length; ++i) out(i) = as_int(v[i], what);
  return out;
}

bool as_bool(const json& v, const std::string& what) {
  if (!v.is_boolean()) fail(what + " must be a boolean");
  return v.get<bool>();
}

json vector_json(const IntVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

}  // namespace

ProblemConfig parse_config(const json& doc) {
  only_keys(doc, "config", {"surface", "chern", "polarizations", "C", "oracle"});

  const json& surf = require(doc, "config", "surface");
  only_keys(surf, "surface", {"b2", "gram", "K", "n2", "flags"});
  const std::int64_t b2 = as_int(require(surf, "surface", "b2"), "surface.b2");
  if (b2 < 1 || b2 > 64) fail("surface.b2 must be between 1 and 64");
  const int n = static_cast<int>(b2);
  const json& rows = require(surf, "surface", "gram");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n)
    fail("surface.gram must be a b2 x b2 array");
  IntMatrix gram(n, n);
  for (int i = 0; i < n; ++i) gram.row(i) = as_vector(rows[i], "surface.gram row", n);
  const IntVector K = as_vector(require(surf, "surface", "K"), "surface.K", n);
  std::int64_t n2 = 1;
  if (surf.contains("n2")) n2 = as_int(surf.at("n2"), "surface.n2");
  SurfaceFlags flags;
  if (surf.contains("flags")) {
    const json& f = surf.at("flags");
    only_keys(f, "surface.flags", {"minus_K_effective", "K_torsion"});
    if (f.contains("minus_K_effective"))
      flags.minus_K_effective = as_bool(f.at("minus_K_effective"),
                                        "surface.flags.minus_K_effective");
    if (f.contains("K_torsion"))
      flags.K_torsion = as_bool(f.at("K_torsion"), "surface.flags.K_torsion");
  }

  const json& ch = require(doc, "config", "chern");
  only_keys(ch, "chern", {"c1", "c2"});
  ChernData chern;
  chern.c1 = as_vector(require(ch, "chern", "c1"), "chern.c1", n);
  chern.c2 = as_int(require(ch, "chern", "c2"), "chern.c2");

  const json& pol = require(doc, "config", "polarizations");
  only_keys(pol, "polarizations", {"H_minus", "H_plus"});
  IntVector hm = as_vector(require(pol, "polarizations", "H_minus"),
                           "polarizations.H_minus", n);
  IntVector hp = as_vector(require(pol, "polarizations", "H_plus"),
                           "polarizations.H_plus", n);

  std::optional<IntVector> C;
  if (doc.contains("C")) C = as_vector(doc.at("C"), "C", n);

  OracleCaps caps;
  if (doc.contains("oracle")) {
    const json& o = doc.at("oracle");
    only_keys(o, "oracle", {"max_level", "max_b2"});
    if (o.contains("max_level"))
      caps.max_level = static_cast<int>(as_int(o.at("max_level"), "oracle.max_level"));
    if (o.contains("max_b2"))
      caps.max_b2 = static_cast<int>(as_int(o.at("max_b2"), "oracle.max_b2"));
  }

  return ProblemConfig{SurfaceData(gram, K, n2, flags), chern, hm, hp, C, caps};
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

json config_to_json(const ProblemConfig& config) {
  const SurfaceData& s = config.surface;
  json gram = json::array();
  for (int i = 0; i < s.b2(); ++i) gram.push_back(vector_json(s.gram().row(i).transpose()));
  json doc = {
      {"surface",
       {{"b2", s.b2()},
        {"gram", gram},
        {"K", vector_json(s.K())},
        {"n2", s.n2()},
        {"flags",
         {{"minus_K_effective", s.flags().minus_K_effective},
          {"K_torsion", s.flags().K_torsion}}}}},
      {"chern", {{"c1", vector_json(config.chern.c1)}, {"c2", config.chern.c2}}},
      {"polarizations",
       {{"H_minus", vector_json(config.h_minus)},
        {"H_plus", vector_json(config.h_plus)}}},
      {"oracle",
       {{"max_level", config.caps.max_level}, {"max_b2", config.caps.max_b2}}}};
  if (config.C) doc["C"] = vector_json(*config.C);
  return doc;
}

}  // namespace wallcross
