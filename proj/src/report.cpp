#include "qgame/report.hpp"

#include <cstdio>
#include <sstream>

namespace qgame {

namespace {

// 15 significant digits, round-tripped so the JSON layer prints the same
// digits on every run.
double round15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return std::strtod(buf, nullptr);
}

Json verdict_json(const InequalityVerdict& v) {
  return {{"margin", format_fraction(v.margin)},
          {"holds", v.holds()},
          {"boundary", v.boundary()}};
}

Json nash_json(const NashResult& r) {
  return {{"strategy",
           {{"alice", {r.strategy.alice[0], r.strategy.alice[1]}},
            {"bob", {r.strategy.bob[0], r.strategy.bob[1]}},
            {"index", r.strategy.index()}}},
          {"payoffs", {format_fraction(r.payoff_a), format_fraction(r.payoff_b)}},
          {"is_equilibrium", r.is_equilibrium},
          {"is_degenerate", r.is_degenerate},
          {"is_fair", r.is_fair},
          {"saturates_bell_bound", r.saturates_bell_bound}};
}

}  // namespace

Json constraint_report_to_json(const ConstraintReport& report) {
  Json residuals = Json::array();
  for (const auto& r : report.bell_coupling_residuals)
    residuals.push_back(format_fraction(r));
  Json conflicts = Json::array();
  for (const auto& v : report.conflict_inequalities) conflicts.push_back(verdict_json(v));
  return {{"symmetry_ok", report.symmetry_ok},
          {"bell_coupling_residuals", residuals},
          {"conflict_inequalities", conflicts},
          {"fairness_residual", format_fraction(report.fairness_residual)}};
}

VerificationReport run_pipeline(const GameSpecDocument& doc, bool with_classical,
                                bool with_quantum) {
  VerificationReport report;
  report.label = doc.label;
  report.constraints = make_constraint_report(doc.params);
  report.is_conflicting_interest =
      report.constraints.symmetry_ok && report.constraints.coupling_ok() &&
      report.constraints.conflict_ok();

  bool classical_has_unfair = false;
  if (with_classical && report.is_conflicting_interest) {
    ClassicalSection section;
    section.results = find_pure_nash(build_utility_table(doc.params));
    section.affine = total_payoff_as_bell_affine(doc.params);
    section.bound = classical_total_payoff_bound(doc.params);
    for (const auto& r : section.results)
      classical_has_unfair = classical_has_unfair || (r.is_equilibrium && !r.is_fair);
    report.classical = std::move(section);
  }

  if (with_quantum && report.is_conflicting_interest &&
      report.constraints.fairness_residual == 0) {
    OptimizerOptions opts;
    opts.grid_step = doc.options.grid_step;
    QuantumSection section;
    section.optimum = maximize_fair_payoff(doc.params, opts);
    section.fair_exact = fair_payoff_optimum(doc.params);
    section.total_exact = total_payoff_optimum(doc.params);
    section.advantage_exact = quantum_advantage(doc.params);
    report.quantum = std::move(section);
  }

  report.quantum_restores_fairness = classical_has_unfair && report.quantum.has_value();
  return report;
}

Json report_to_json(const VerificationReport& report) {
  Json out;
  out["label"] = report.label;
  out["constraints"] = constraint_report_to_json(report.constraints);
  if (report.classical) {
    Json equilibria = Json::array();
    for (const auto& r : report.classical->results) equilibria.push_back(nash_json(r));
    out["classical"] = {
        {"equilibria", equilibria},
        {"affine", {{"alpha", format_fraction(report.classical->affine.alpha)},
                    {"beta", format_fraction(report.classical->affine.beta)}}},
        {"bound", format_fraction(report.classical->bound)}};
  }
  if (report.quantum) {
    const auto& q = *report.quantum;
    Json angles = Json::array();
    for (double p : q.optimum.phis) angles.push_back(round15(p));
    out["quantum"] = {
        {"angles", angles},
        {"fair_payoff", round15(q.optimum.payoff_per_player)},
        {"total_payoff", round15(2 * q.optimum.payoff_per_player)},
        {"chsh", round15(q.optimum.chsh_value)},
        {"fair_payoff_exact", q.fair_exact.str()},
        {"total_payoff_exact", q.total_exact.str()},
        {"advantage_exact", q.advantage_exact.str()},
        {"advantage", round15(q.advantage_exact.value())}};
  }
  out["verdicts"] = {{"is_conflicting_interest", report.is_conflicting_interest},
                     {"quantum_restores_fairness", report.quantum_restores_fairness}};
  return out;
}

std::string constraint_report_to_text(const ConstraintReport& report,
                                      const std::string& label) {
  std::ostringstream out;
  out << "game: " << label << "\n";
  out << "player symmetry: " << (report.symmetry_ok ? "ok" : "FAILED") << "\n";
  out << "bell coupling:   " << (report.coupling_ok() ? "ok (11 residuals zero)" : "FAILED")
      << "\n";
  for (std::size_t i = 0; i < report.conflict_inequalities.size(); ++i) {
    const auto& v = report.conflict_inequalities[i];
    out << "conflict line " << i + 1 << ": "
        << (v.holds() ? "strict" : (v.boundary() ? "FAILED (boundary)" : "FAILED"))
        << " (margin " << format_fraction(v.margin) << ")\n";
  }
  out << "fairness residual: " << format_fraction(report.fairness_residual) << "\n";
  return out.str();
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << constraint_report_to_text(report.constraints, report.label);
  if (report.classical) {
    out << "classical bound: " << format_fraction(report.classical->bound) << "\n";
    out << "affine decomposition: alpha = "
        << format_fraction(report.classical->affine.alpha)
        << ", beta = " << format_fraction(report.classical->affine.beta) << "\n";
    for (const auto& r : report.classical->results) {
      if (!r.is_equilibrium) continue;
      out << "equilibrium #" << r.strategy.index() << ": payoffs ("
          << format_fraction(r.payoff_a) << ", " << format_fraction(r.payoff_b) << ")"
          << (r.is_fair ? " fair" : " unfair")
          << (r.saturates_bell_bound ? ", saturates bound" : "")
          << (r.is_degenerate ? ", degenerate" : "") << "\n";
    }
  }
  if (report.quantum) {
    const auto& q = *report.quantum;
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "quantum optimum: F = %.15g per player (exact %s)\n"
                  "total payoff: %.15g (exact %s)\n"
                  "CHSH value: %.15g\n"
                  "advantage over classical bound: %.15g (exact %s)\n",
                  q.optimum.payoff_per_player, q.fair_exact.str().c_str(),
                  2 * q.optimum.payoff_per_player, q.total_exact.str().c_str(),
                  q.optimum.chsh_value, q.advantage_exact.value(),
                  q.advantage_exact.str().c_str());
    out << buf;
    out << "angles (radians):";
    for (double p : q.optimum.phis) {
      std::snprintf(buf, sizeof(buf), " %.15g", p);
      out << buf;
    }
    out << "\n";
  }
  out << "verdict: conflicting interest = "
      << (report.is_conflicting_interest ? "yes" : "no")
      << ", quantum restores fairness = "
      << (report.quantum_restores_fairness ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace qgame
