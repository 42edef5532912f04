// Command-line front end: validate game specs, enumerate classical
// equilibria, optimize the quantum counterpart, and emit reports.

#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>

#include "qgame/errors.hpp"
#include "qgame/report.hpp"
#include "qgame/spec_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConstraintFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInternalInconsistency = 3;

struct CommonArgs {
  std::string spec_path;
  bool use_pappa = false;
  std::string format = "text";
  double grid_step = 0.0;   // 0 = spec/default value
  double tolerance = 0.0;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_spec = true) {
  if (needs_spec)
    cmd->add_option("spec", args.spec_path, "Path to a game-spec JSON file");
  cmd->add_flag("--pappa", args.use_pappa, "Use the built-in reference instance");
  cmd->add_option("--format", args.format, "Output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--grid-step", args.grid_step, "Optimizer grid step (radians)");
  cmd->add_option("--tolerance", args.tolerance, "Optimizer-vs-analytic tolerance");
}

qgame::GameSpecDocument resolve_spec(const CommonArgs& args) {
  qgame::GameSpecDocument doc;
  if (args.use_pappa) {
    doc = qgame::pappa_spec();
  } else if (!args.spec_path.empty()) {
    doc = qgame::load_game_spec(args.spec_path);
  } else {
    throw qgame::ParseError("no spec given: pass a file path or --pappa");
  }
  if (args.grid_step > 0.0) doc.options.grid_step = args.grid_step;
  if (args.tolerance > 0.0) doc.options.tolerance = args.tolerance;
  return doc;
}

void emit(const qgame::VerificationReport& report, const std::string& format) {
  if (format == "json")
    std::cout << qgame::report_to_json(report).dump(2) << "\n";
  else
    std::cout << qgame::report_to_text(report);
}

int run_validate(const CommonArgs& args) {
  const auto doc = resolve_spec(args);
  const auto report = qgame::make_constraint_report(doc.params);
  if (args.format == "json") {
    qgame::Json out;
    out["label"] = doc.label;
    out["constraints"] = qgame::constraint_report_to_json(report);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << qgame::constraint_report_to_text(report, doc.label);
  }
  const bool pass = report.symmetry_ok && report.coupling_ok() && report.conflict_ok();
  return pass ? kExitOk : kExitConstraintFailure;
}

int run_classical(const CommonArgs& args) {
  const auto doc = resolve_spec(args);
  const auto report = qgame::run_pipeline(doc, /*with_classical=*/true,
                                          /*with_quantum=*/false);
  emit(report, args.format);
  if (!report.is_conflicting_interest) {
    std::cerr << "refused: the spec is not a conflicting-interest game\n";
    return kExitConstraintFailure;
  }
  // The candidate equilibrium must saturate the classical bound.
  const int candidate = qgame::candidate_strategy().index();
  for (const auto& r : report.classical->results) {
    if (r.strategy.index() != candidate) continue;
    if (!r.is_equilibrium || !r.saturates_bell_bound) {
      std::cerr << "internal inconsistency: candidate strategy does not saturate "
                   "the bound\n";
      return kExitInternalInconsistency;
    }
  }
  return kExitOk;
}

int run_quantum(const CommonArgs& args, bool compare) {
  const auto doc = resolve_spec(args);
  if (qgame::check_fairness_constraint(doc.params) != 0) {
    const auto report = qgame::run_pipeline(doc, compare, false);
    emit(report, args.format);
    std::cerr << "fairness constraint violated: quantum payoffs differ, no fair "
                 "optimum exists\n";
    return kExitConstraintFailure;
  }
  const auto report = qgame::run_pipeline(doc, compare, /*with_quantum=*/true);
  emit(report, args.format);
  if (!report.is_conflicting_interest) {
    std::cerr << "refused: the spec is not a conflicting-interest game\n";
    return kExitConstraintFailure;
  }
  const auto& q = *report.quantum;
  if (std::abs(q.optimum.payoff_per_player - q.fair_exact.value()) >
      doc.options.tolerance) {
    std::cerr << "internal inconsistency: optimizer payoff disagrees with the "
                 "analytic optimum\n";
    return kExitInternalInconsistency;
  }
  return kExitOk;
}

int run_sample(int count, std::uint64_t seed, std::int64_t attempts, int max_numerator,
               std::int64_t denominator) {
  qgame::SampleOptions options;
  if (attempts > 0) options.attempt_budget = attempts;
  if (max_numerator > 0) options.max_numerator = max_numerator;
  if (denominator > 0) options.denominator = denominator;
  const auto specs = qgame::sample_games(count, seed, options);
  std::cout << "[\n";
  for (std::size_t i = 0; i < specs.size(); ++i)
    std::cout << qgame::game_spec_to_json(specs[i]) << (i + 1 < specs.size() ? ",\n" : "\n");
  std::cout << "]\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction and verification engine for symmetric two-player "
               "Bayesian games with conflicting interest and their quantum "
               "counterparts"};
  app.require_subcommand(1);

  CommonArgs validate_args, classical_args, quantum_args, compare_args;
  auto* validate = app.add_subcommand("validate", "Check all utility constraints");
  add_common(validate, validate_args);
  auto* classical = app.add_subcommand(
      "classical", "Enumerate pure Nash equilibria and the Bell-bounded payoff");
  add_common(classical, classical_args);
  auto* quantum = app.add_subcommand(
      "quantum", "Maximize the fair quantum payoff up to the Tsirelson bound");
  add_common(quantum, quantum_args);
  auto* compare =
      app.add_subcommand("compare", "Full classical-vs-quantum verification report");
  add_common(compare, compare_args);

  int sample_count = 1;
  std::uint64_t sample_seed = 0;
  std::int64_t sample_attempts = 0;
  int sample_max_numerator = 0;
  std::int64_t sample_denominator = 0;
  auto* sample =
      app.add_subcommand("sample", "Draw random valid conflicting-interest games");
  sample->add_option("--count", sample_count, "Number of games to emit");
  sample->add_option("--seed", sample_seed, "RNG seed (deterministic output)");
  sample->add_option("--attempts", sample_attempts, "Rejection-sampling budget");
  sample->add_option("--max-numerator", sample_max_numerator,
                     "Numerator range [-n, n] (default 8)");
  sample->add_option("--denominator", sample_denominator,
                     "Fixed denominator (default 4)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(validate_args);
    if (classical->parsed()) return run_classical(classical_args);
    if (quantum->parsed()) return run_quantum(quantum_args, /*compare=*/false);
    if (compare->parsed()) return run_quantum(compare_args, /*compare=*/true);
    if (sample->parsed())
      return run_sample(sample_count, sample_seed, sample_attempts,
                        sample_max_numerator, sample_denominator);
  } catch (const qgame::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParseError;
  } catch (const qgame::ConstraintViolated& e) {
    std::cerr << "constraint violated: " << e.what() << "\n";
    return kExitConstraintFailure;
  } catch (const qgame::SignAssumptionViolated& e) {
    std::cerr << "constraint violated: " << e.what() << "\n";
    return kExitConstraintFailure;
  } catch (const qgame::SamplingExhausted& e) {
    std::cerr << "sampling exhausted: " << e.what() << "\n";
    return kExitConstraintFailure;
  } catch (const qgame::BoundViolated& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitInternalInconsistency;
  }
  return kExitOk;
}
