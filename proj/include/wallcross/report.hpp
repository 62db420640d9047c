#pragma once

// Report types behind the command-line front end, their JSON form (exact
// fractions as "p/q" strings) and plain-text tables.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wallcross/config.hpp"
#include "wallcross/delta_engine.hpp"

namespace wallcross {

struct WallsReport {
  std::int64_t N = 0;
  std::vector<WallClass> walls;
  FineCriterion fine;
  AdmissibilityReport admissibility;
};

struct MiniwallEntry {
  IntVector xi;
  std::int64_t d = 0;
  std::vector<Miniwall> miniwalls;
};

struct MiniwallsReport {
  std::vector<MiniwallEntry> entries;
};

struct DeltaWall {
  IntVector xi;
  std::int64_t d = 0;
  std::int64_t e = 0;
  Goodness goodness = Goodness::Unknown;
  bool exact = false;
  bool uncertified = false;
  std::int64_t modulus_exponent = 0;
  std::vector<WallTerm> terms;
};

struct DeltaReport {
  std::int64_t l = 0;
  std::int64_t r = 0;
  std::int64_t n2 = 1;
  int sign = 1;
  std::string sign_note;
  std::vector<DeltaWall> walls;
  std::optional<IntVector> alpha;
  std::optional<Rational> alpha_eval;
  std::optional<std::string> alpha_label;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int level = 2;
  std::vector<SuiteResult> suites;
  bool passed() const;
};

bool operator==(const WallClass& a, const WallClass& b);
bool operator==(const Miniwall& a, const Miniwall& b);
bool operator==(const FineCriterion& a, const FineCriterion& b);
bool operator==(const AdmissibilityReport& a, const AdmissibilityReport& b);
bool operator==(const WallsReport& a, const WallsReport& b);
bool operator==(const MiniwallEntry& a, const MiniwallEntry& b);
bool operator==(const MiniwallsReport& a, const MiniwallsReport& b);
bool operator==(const DeltaWall& a, const DeltaWall& b);
bool operator==(const DeltaReport& a, const DeltaReport& b);
bool operator==(const SuiteResult& a, const SuiteResult& b);
bool operator==(const VerifyReport& a, const VerifyReport& b);

WallsReport make_walls_report(const ProblemConfig& config, unsigned threads = 1);

/// All walls, or only the one selected by `xi`. Throws DegenerateC when C is
/// missing or <xi.C> <= 0, UnknownWall when xi is not a separating class.
MiniwallsReport make_miniwalls_report(const ProblemConfig& config,
                                      const std::optional<IntVector>& xi,
                                      unsigned threads = 1);

DeltaReport make_delta_report(const ProblemConfig& config, std::int64_t l,
                              std::int64_t r,
                              const std::optional<IntVector>& alpha,
                              unsigned threads = 1);

nlohmann::json to_json(const WallsReport& report);
nlohmann::json to_json(const MiniwallsReport& report);
nlohmann::json to_json(const DeltaReport& report);
nlohmann::json to_json(const VerifyReport& report);

/// Inverses of to_json. Throw Error(ConfigError) on malformed input.
WallsReport walls_report_from_json(const nlohmann::json& doc);
MiniwallsReport miniwalls_report_from_json(const nlohmann::json& doc);
DeltaReport delta_report_from_json(const nlohmann::json& doc);
VerifyReport verify_report_from_json(const nlohmann::json& doc);

std::string render_text(const WallsReport& report);
std::string render_text(const MiniwallsReport& report);
std::string render_text(const DeltaReport& report);
std::string render_text(const VerifyReport& report);

/// "c L^a q^b" sums, e.g. "-28 L^3 - 6 L q".
std::string format_terms(const std::vector<WallTerm>& terms);

/// Parses "a1,a2,..." into an integer vector.
IntVector parse_int_list(const std::string& text);

}  // namespace wallcross
