// Command-line front end: walls | miniwalls | delta | verify.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "wallcross/config.hpp"
#include "wallcross/report.hpp"
#include "wallcross/verify.hpp"

namespace {

using namespace wallcross;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConfigError:
    case ErrorKind::InvalidSurface:
    case ErrorKind::DimensionMismatch:
      return 2;
    case ErrorKind::InvalidPolarization:
      return 3;
    case ErrorKind::DegenerateC:
    case ErrorKind::UnknownWall:
      return 4;
    case ErrorKind::WeightMismatch:
      return 5;
    default:
      return 1;
  }
}

template <typename Report>
void emit(const Report& report, bool json) {
  if (json) std::cout << to_json(report).dump(2) << "\n";
  else std::cout << render_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walls and wall-crossing changes of Donaldson invariants"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  bool json = false;
  unsigned threads = 1;
  app.add_option("--config", config_path, "problem description (JSON)");
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--threads", threads, "worker threads for enumeration")
      ->check(CLI::Range(1u, 256u));

  auto* walls = app.add_subcommand("walls", "list walls between H_- and H_+");

  auto* miniwalls = app.add_subcommand("miniwalls", "miniwalls inside walls");
  std::string xi_text;
  miniwalls->add_option("--xi", xi_text,
                        "wall index (as listed by `walls`) or vector a1,a2,...");

  auto* delta = app.add_subcommand("delta", "change of the invariants");
  std::int64_t l = -1, r = -1;
  std::string alpha_text;
  delta->add_option("--l", l, "power of the degree-2 class")->required();
  delta->add_option("--r", r, "power of the point class")->required();
  delta->add_option("--alpha", alpha_text, "evaluate at alpha = a1,a2,...");

  auto* verify = app.add_subcommand("verify", "run the self-check suites");
  std::uint64_t seed = 1;
  int level = 2;
  bool mutate_q2 = false;
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--level", level, "1 = quick, 2 = full")
      ->check(CLI::Range(1, 2));
  verify->add_flag("--mutate-q2", mutate_q2,
                   "perturb Q_2 (the P->Q suite must then fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      VerifyOptions options;
      options.level = level;
      options.seed = seed;
      options.mutate_q2 = mutate_q2;
      if (!config_path.empty()) options.config = load_config(config_path);
      const VerifyReport report = run_verify(options);
      emit(report, json);
      return report.passed() ? 0 : 1;
    }

    if (config_path.empty())
      throw Error(ErrorKind::ConfigError, "--config is required");
    const ProblemConfig config = load_config(config_path);

    if (walls->parsed()) {
      emit(make_walls_report(config, threads), json);
    } else if (miniwalls->parsed()) {
      std::optional<IntVector> xi;
      if (!xi_text.empty()) {
        if (xi_text.find(',') == std::string::npos &&
            config.surface.b2() > 1) {
          const IntVector index = parse_int_list(xi_text);
          const auto all = enumerate_separating_classes(
              config.surface, config.chern, config.h_minus, config.h_plus,
              threads);
          if (index(0) < 0 || index(0) >= static_cast<std::int64_t>(all.size()))
            throw Error(ErrorKind::UnknownWall,
                        "wall index " + xi_text + " out of range (" +
                            std::to_string(all.size()) + " walls)");
          xi = all[index(0)].xi;
        } else {
          xi = parse_int_list(xi_text);
          if (xi->size() != config.surface.b2())
            throw Error(ErrorKind::UnknownWall,
                        "xi must have b2 = " +
                            std::to_string(config.surface.b2()) + " entries");
        }
      }
      emit(make_miniwalls_report(config, xi, threads), json);
    } else if (delta->parsed()) {
      std::optional<IntVector> alpha;
      if (!alpha_text.empty()) {
        alpha = parse_int_list(alpha_text);
        if (alpha->size() != config.surface.b2())
          throw Error(ErrorKind::DimensionMismatch,
                      "alpha must have b2 = " +
                          std::to_string(config.surface.b2()) + " entries");
      }
      emit(make_delta_report(config, l, r, alpha, threads), json);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
