#include "wallcross/report.hpp"

#include <algorithm>
#include <sstream>

namespace wallcross {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& message) {
  throw Error(ErrorKind::ConfigError, "malformed report: " + message);
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    bad(std::string("missing '") + key + "'");
  return obj.at(key);
}

std::int64_t int_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_number_integer()) bad(std::string("'") + key + "' is not an integer");
  return v.get<std::int64_t>();
}

bool bool_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_boolean()) bad(std::string("'") + key + "' is not a boolean");
  return v.get<bool>();
}

std::string string_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_string()) bad(std::string("'") + key + "' is not a string");
  return v.get<std::string>();
}

Rational rational_field(const json& obj, const char* key) {
  try {
    return parse_rational(string_field(obj, key));
  } catch (const Error&) {
    bad(std::string("'") + key + "' is not a fraction");
  }
}

json vec_json(const IntVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

IntVector vec_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) bad(std::string("'") + key + "' is not an array");
  IntVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) bad(std::string("'") + key + "' entry");
    out(static_cast<Eigen::Index>(i)) = v[i].get<std::int64_t>();
  }
  return out;
}

const json& array_field(const json& obj, const char* key) {
  const json& v = field(obj, key);
  if (!v.is_array()) bad(std::string("'") + key + "' is not an array");
  return v;
}

Goodness goodness_from(const std::string& s) {
  if (s == "certified") return Goodness::CertifiedGood;
  if (s == "unknown") return Goodness::Unknown;
  bad("goodness '" + s + "'");
}

bool same(const IntVector& a, const IntVector& b) {
  return a.size() == b.size() && a == b;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Left-aligned columns separated by two spaces.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (widths.size() <= i) widths.push_back(0);
      widths[i] = std::max(widths[i], row[i].size());
    }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i)
      line += i + 1 == row.size() ? row[i] : pad(row[i], widths[i]) + "  ";
    out += line + "\n";
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

constexpr const char* kSignNote =
    "sign converts to the gauge-theoretic invariant only for admissible "
    "moduli spaces or c2 >> 0; admissibility clauses (2) and (4) are not "
    "checked";

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(),
                     [](const SuiteResult& s) { return s.passed; });
}

bool operator==(const WallClass& a, const WallClass& b) {
  return same(a.xi, b.xi) && a.xi_sq == b.xi_sq && a.d == b.d && a.e == b.e &&
         a.rk_minus == b.rk_minus && a.rk_plus == b.rk_plus && a.t0 == b.t0 &&
         a.goodness == b.goodness && a.component_case == b.component_case;
}
bool operator==(const Miniwall& a, const Miniwall& b) {
  return a.a == b.a && a.n == b.n && a.m == b.m;
}
bool operator==(const FineCriterion& a, const FineCriterion& b) {
  return a.fine == b.fine && a.message == b.message;
}
bool operator==(const AdmissibilityReport& a, const AdmissibilityReport& b) {
  return a.h_minus_off_walls == b.h_minus_off_walls &&
         a.h_plus_off_walls == b.h_plus_off_walls && a.clause3 == b.clause3 &&
         a.note == b.note;
}
bool operator==(const WallsReport& a, const WallsReport& b) {
  return a.N == b.N && a.walls == b.walls && a.fine == b.fine &&
         a.admissibility == b.admissibility;
}
bool operator==(const MiniwallEntry& a, const MiniwallEntry& b) {
  return same(a.xi, b.xi) && a.d == b.d && a.miniwalls == b.miniwalls;
}
bool operator==(const MiniwallsReport& a, const MiniwallsReport& b) {
  return a.entries == b.entries;
}
bool operator==(const DeltaWall& a, const DeltaWall& b) {
  return same(a.xi, b.xi) && a.d == b.d && a.e == b.e &&
         a.goodness == b.goodness && a.exact == b.exact &&
         a.uncertified == b.uncertified &&
         a.modulus_exponent == b.modulus_exponent && a.terms == b.terms;
}
bool operator==(const DeltaReport& a, const DeltaReport& b) {
  const bool alpha_same = a.alpha.has_value() == b.alpha.has_value() &&
                          (!a.alpha || same(*a.alpha, *b.alpha));
  return a.l == b.l && a.r == b.r && a.n2 == b.n2 && a.sign == b.sign &&
         a.sign_note == b.sign_note && a.walls == b.walls && alpha_same &&
         a.alpha_eval == b.alpha_eval && a.alpha_label == b.alpha_label;
}
bool operator==(const SuiteResult& a, const SuiteResult& b) {
  return a.name == b.name && a.passed == b.passed && a.detail == b.detail;
}
bool operator==(const VerifyReport& a, const VerifyReport& b) {
  return a.seed == b.seed && a.level == b.level && a.suites == b.suites;
}

WallsReport make_walls_report(const ProblemConfig& config, unsigned threads) {
  const SurfaceData& s = config.surface;
  check_polarizations(s, config.h_minus, config.h_plus);
  WallsReport report;
  report.N = config.chern.expected_dimension(s);
  report.walls = enumerate_separating_classes(s, config.chern, config.h_minus,
                                              config.h_plus, threads);
  report.fine = check_fine_criterion(s, config.chern);
  report.admissibility =
      check_admissibility(s, config.chern, config.h_minus, config.h_plus);
  return report;
}

MiniwallsReport make_miniwalls_report(const ProblemConfig& config,
                                      const std::optional<IntVector>& xi,
                                      unsigned threads) {
  const SurfaceData& s = config.surface;
  check_polarizations(s, config.h_minus, config.h_plus);
  if (!config.C)
    throw Error(ErrorKind::DegenerateC, "config has no C for miniwalls");
  std::vector<WallClass> walls = enumerate_separating_classes(
      s, config.chern, config.h_minus, config.h_plus, threads);
  if (xi) {
    s.check_length(*xi, "xi");
    auto it = std::find_if(walls.begin(), walls.end(),
                           [&](const WallClass& w) { return w.xi == *xi; });
    if (it == walls.end())
      throw Error(ErrorKind::UnknownWall,
                  to_string(*xi) + " is not a separating class");
    walls = {*it};
  }
  MiniwallsReport report;
  for (const WallClass& w : walls)
    report.entries.push_back(
        {w.xi, w.d, enumerate_miniwalls(s, config.chern, w, *config.C)});
  return report;
}

DeltaReport make_delta_report(const ProblemConfig& config, std::int64_t l,
                              std::int64_t r,
                              const std::optional<IntVector>& alpha,
                              unsigned threads) {
  const SurfaceData& s = config.surface;
  check_polarizations(s, config.h_minus, config.h_plus);
  check_weight(s, config.chern, l, r);
  if (alpha) s.check_length(*alpha, "alpha");
  const TotalChange total = total_change(s, config.chern, config.h_minus,
                                         config.h_plus, l, r, threads);
  DeltaReport report;
  report.l = l;
  report.r = r;
  report.n2 = total.n2;
  report.sign = donaldson_sign(s, config.chern);
  report.sign_note = kSignNote;
  for (const WallContribution& c : total.walls)
    report.walls.push_back({c.wall.xi, c.wall.d, c.wall.e, c.wall.goodness,
                            c.delta.exact,
                            c.wall.goodness != Goodness::CertifiedGood,
                            c.delta.modulus_exponent, c.delta.terms});
  if (alpha) {
    const TotalEvaluation ev = total.evaluate(s, *alpha);
    report.alpha = *alpha;
    report.alpha_eval = ev.total;
    report.alpha_label = ev.label;
  }
  return report;
}

json to_json(const WallsReport& report) {
  json walls = json::array();
  for (const WallClass& w : report.walls)
    walls.push_back({{"xi", vec_json(w.xi)},
                     {"xi_sq", w.xi_sq},
                     {"d", w.d},
                     {"e", w.e},
                     {"rk_minus", w.rk_minus},
                     {"rk_plus", w.rk_plus},
                     {"t0", to_string(w.t0)},
                     {"goodness", to_string(w.goodness)},
                     {"component_case", w.component_case}});
  return {{"N", report.N},
          {"walls", walls},
          {"fine", {{"fine", report.fine.fine}, {"message", report.fine.message}}},
          {"admissibility",
           {{"H_minus_off_walls", report.admissibility.h_minus_off_walls},
            {"H_plus_off_walls", report.admissibility.h_plus_off_walls},
            {"clause3", report.admissibility.clause3},
            {"note", report.admissibility.note}}}};
}

WallsReport walls_report_from_json(const json& doc) {
  WallsReport report;
  report.N = int_field(doc, "N");
  for (const json& w : array_field(doc, "walls")) {
    WallClass c;
    c.xi = vec_field(w, "xi");
    c.xi_sq = int_field(w, "xi_sq");
    c.d = int_field(w, "d");
    c.e = int_field(w, "e");
    c.rk_minus = int_field(w, "rk_minus");
    c.rk_plus = int_field(w, "rk_plus");
    c.t0 = rational_field(w, "t0");
    c.goodness = goodness_from(string_field(w, "goodness"));
    c.component_case = bool_field(w, "component_case");
    report.walls.push_back(std::move(c));
  }
  const json& fine = field(doc, "fine");
  report.fine = {bool_field(fine, "fine"), string_field(fine, "message")};
  const json& adm = field(doc, "admissibility");
  report.admissibility = {bool_field(adm, "H_minus_off_walls"),
                          bool_field(adm, "H_plus_off_walls"),
                          bool_field(adm, "clause3"), string_field(adm, "note")};
  return report;
}

json to_json(const MiniwallsReport& report) {
  json entries = json::array();
  for (const MiniwallEntry& e : report.entries) {
    json list = json::array();
    for (const Miniwall& m : e.miniwalls)
      list.push_back({{"a", to_string(m.a)}, {"n", m.n}, {"m", m.m}});
    entries.push_back({{"xi", vec_json(e.xi)}, {"d", e.d}, {"miniwalls", list}});
  }
  return {{"walls", entries}};
}

MiniwallsReport miniwalls_report_from_json(const json& doc) {
  MiniwallsReport report;
  for (const json& e : array_field(doc, "walls")) {
    MiniwallEntry entry;
    entry.xi = vec_field(e, "xi");
    entry.d = int_field(e, "d");
    for (const json& m : array_field(e, "miniwalls"))
      entry.miniwalls.push_back(
          {rational_field(m, "a"), int_field(m, "n"), int_field(m, "m")});
    report.entries.push_back(std::move(entry));
  }
  return report;
}

json to_json(const DeltaReport& report) {
  json walls = json::array();
  for (const DeltaWall& w : report.walls) {
    json terms = json::array();
    for (const WallTerm& t : w.terms)
      terms.push_back(
          {{"coef", to_string(t.coef)}, {"powL", t.powL}, {"powQ", t.powQ}});
    walls.push_back({{"xi", vec_json(w.xi)},
                     {"d", w.d},
                     {"e", w.e},
                     {"goodness", to_string(w.goodness)},
                     {"exact", w.exact},
                     {"uncertified", w.uncertified},
                     {"modulus_exponent", w.modulus_exponent},
                     {"terms", terms}});
  }
  json doc = {{"l", report.l},       {"r", report.r},
              {"n2", report.n2},     {"sign", report.sign},
              {"sign_note", report.sign_note}, {"walls", walls}};
  if (report.alpha) doc["alpha"] = vec_json(*report.alpha);
  if (report.alpha_eval) doc["alpha_eval"] = to_string(*report.alpha_eval);
  if (report.alpha_label) doc["alpha_label"] = *report.alpha_label;
  return doc;
}

DeltaReport delta_report_from_json(const json& doc) {
  DeltaReport report;
  report.l = int_field(doc, "l");
  report.r = int_field(doc, "r");
  report.n2 = int_field(doc, "n2");
  report.sign = static_cast<int>(int_field(doc, "sign"));
  report.sign_note = string_field(doc, "sign_note");
  for (const json& w : array_field(doc, "walls")) {
    DeltaWall dw;
    dw.xi = vec_field(w, "xi");
    dw.d = int_field(w, "d");
    dw.e = int_field(w, "e");
    dw.goodness = goodness_from(string_field(w, "goodness"));
    dw.exact = bool_field(w, "exact");
    dw.uncertified = bool_field(w, "uncertified");
    dw.modulus_exponent = int_field(w, "modulus_exponent");
    for (const json& t : array_field(w, "terms"))
      dw.terms.push_back({rational_field(t, "coef"),
                          static_cast<int>(int_field(t, "powL")),
                          static_cast<int>(int_field(t, "powQ"))});
    report.walls.push_back(std::move(dw));
  }
  if (doc.contains("alpha")) report.alpha = vec_field(doc, "alpha");
  if (doc.contains("alpha_eval")) report.alpha_eval = rational_field(doc, "alpha_eval");
  if (doc.contains("alpha_label")) report.alpha_label = string_field(doc, "alpha_label");
  return report;
}

json to_json(const VerifyReport& report) {
  json suites = json::array();
  for (const SuiteResult& s : report.suites)
    suites.push_back(
        {{"name", s.name}, {"passed", s.passed}, {"detail", s.detail}});
  return {{"seed", report.seed},
          {"level", report.level},
          {"passed", report.passed()},
          {"suites", suites}};
}

VerifyReport verify_report_from_json(const json& doc) {
  VerifyReport report;
  const json& seed = field(doc, "seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) bad("'seed'");
  report.seed = seed.get<std::uint64_t>();
  report.level = static_cast<int>(int_field(doc, "level"));
  for (const json& s : array_field(doc, "suites"))
    report.suites.push_back({string_field(s, "name"), bool_field(s, "passed"),
                             string_field(s, "detail")});
  return report;
}

std::string render_text(const WallsReport& report) {
  std::ostringstream out;
  out << "expected dimension N = " << report.N << "\n";
  if (report.walls.empty()) {
    out << "no walls separate H_- and H_+\n";
  } else {
    std::vector<std::vector<std::string>> rows = {
        {"#", "xi", "xi^2", "d", "e", "rk-", "rk+", "t0", "goodness",
         "component"}};
    for (std::size_t i = 0; i < report.walls.size(); ++i) {
      const WallClass& w = report.walls[i];
      rows.push_back({std::to_string(i), to_string(w.xi),
                      std::to_string(w.xi_sq), std::to_string(w.d),
                      std::to_string(w.e), std::to_string(w.rk_minus),
                      std::to_string(w.rk_plus), to_string(w.t0),
                      to_string(w.goodness), yes_no(w.component_case)});
    }
    out << table(rows);
  }
  out << "universal family: " << (report.fine.fine ? "yes" : "not guaranteed")
      << " (" << report.fine.message << ")\n";
  out << "H_- off walls: " << yes_no(report.admissibility.h_minus_off_walls)
      << ", H_+ off walls: " << yes_no(report.admissibility.h_plus_off_walls)
      << ", clause (3): " << yes_no(report.admissibility.clause3) << "\n";
  out << "note: " << report.admissibility.note << "\n";
  return out.str();
}

std::string render_text(const MiniwallsReport& report) {
  std::ostringstream out;
  if (report.entries.empty()) out << "no walls separate H_- and H_+\n";
  for (const MiniwallEntry& e : report.entries) {
    out << "xi = " << to_string(e.xi) << " (d = " << e.d << ")\n";
    if (e.miniwalls.empty()) {
      out << "  no miniwalls in [0, 1]\n";
      continue;
    }
    std::vector<std::vector<std::string>> rows = {{"  a", "n", "m"}};
    for (const Miniwall& m : e.miniwalls)
      rows.push_back({"  " + to_string(m.a), std::to_string(m.n),
                      std::to_string(m.m)});
    out << table(rows);
  }
  return out.str();
}

std::string format_terms(const std::vector<WallTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const WallTerm& t : terms) {
    const bool negative = t.coef < 0;
    const Rational mag = negative ? Rational(-t.coef) : t.coef;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (t.powL > 0) mono += t.powL == 1 ? "L" : "L^" + std::to_string(t.powL);
    if (t.powQ > 0) {
      if (!mono.empty()) mono += " ";
      mono += t.powQ == 1 ? "q" : "q^" + std::to_string(t.powQ);
    }
    if (mono.empty()) out += to_string(mag);
    else if (mag == 1) out += mono;
    else out += to_string(mag) + " " + mono;
  }
  return out;
}

std::string render_text(const DeltaReport& report) {
  std::ostringstream out;
  out << "l = " << report.l << ", r = " << report.r << ", n2 = " << report.n2
      << ", sign = " << (report.sign > 0 ? "+1" : "-1") << "\n";
  out << "L = <xi, alpha>/2, q = alpha^2\n";
  if (report.walls.empty()) out << "no walls separate H_- and H_+\n";
  for (const DeltaWall& w : report.walls) {
    out << "xi = " << to_string(w.xi) << "  d = " << w.d << "  e = " << w.e
        << "  goodness = " << to_string(w.goodness)
        << (w.uncertified ? " (UNCERTIFIED)" : "") << "\n";
    out << "  delta = " << format_terms(w.terms);
    if (w.exact) out << "  [exact]\n";
    else out << "  [leading-order, mod L^" << w.modulus_exponent << "]\n";
  }
  if (report.alpha_eval) {
    out << "total at alpha = " << to_string(*report.alpha) << ": "
        << to_string(*report.alpha_eval) << " [" << *report.alpha_label
        << "]\n";
  }
  out << "note: " << report.sign_note << "\n";
  return out.str();
}

std::string render_text(const VerifyReport& report) {
  std::ostringstream out;
  for (const SuiteResult& s : report.suites) {
    out << (s.passed ? "PASS  " : "FAIL  ") << s.name;
    if (!s.detail.empty()) out << "  (" << s.detail << ")";
    out << "\n";
  }
  out << (report.passed() ? "all suites passed" : "some suites failed")
      << " (level " << report.level << ", seed " << report.seed << ")\n";
  return out.str();
}

IntVector parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      values.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ConfigError, "not an integer list: '" + text + "'");
    }
  }
  if (values.empty())
    throw Error(ErrorKind::ConfigError, "empty integer list");
  IntVector out(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = values[i];
  return out;
}

}  // namespace wallcross
