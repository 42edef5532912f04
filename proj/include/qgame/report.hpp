#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qgame/classical.hpp"
#include "qgame/game_core.hpp"
#include "qgame/quantum.hpp"
#include "qgame/spec_io.hpp"

namespace qgame {

using Json = nlohmann::ordered_json;

struct ClassicalSection {
  std::vector<NashResult> results;  // all 16, canonical order
  BellAffine affine;
  Rational bound;
};

struct QuantumSection {
  QuantumEquilibrium optimum;
  RootTwo fair_exact;       // per-player optimum
  RootTwo total_exact;      // 2F
  RootTwo advantage_exact;  // total minus classical bound
};

struct VerificationReport {
  std::string label;
  ConstraintReport constraints;
  std::optional<ClassicalSection> classical;
  std::optional<QuantumSection> quantum;
  bool is_conflicting_interest = false;
  bool quantum_restores_fairness = false;
};

// Runs the requested engines; the quantum section is produced only when the
// fairness residual is exactly zero and the game is conflict-valid.
VerificationReport run_pipeline(const GameSpecDocument& doc, bool with_classical,
                                bool with_quantum);

Json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

Json constraint_report_to_json(const ConstraintReport& report);
std::string constraint_report_to_text(const ConstraintReport& report, const std::string& label);

}  // namespace qgame
