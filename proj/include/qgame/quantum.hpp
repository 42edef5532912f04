#pragma once

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <utility>

#include "qgame/distribution.hpp"
#include "qgame/game_core.hpp"
#include "qgame/rational.hpp"

namespace qgame {

inline constexpr double kAlgebraTolerance = 1e-12;
inline constexpr double kOptimizerTolerance = 1e-9;
inline const double kTsirelsonBound = 2.0 * std::sqrt(2.0);

using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;

// Eight angles in radians; index 0..3 stands for (Alice type 0, Alice type 1,
// Bob type 0, Bob type 1).
struct MeasurementAngles {
  std::array<double, 4> theta{};
  std::array<double, 4> phi{};

  // All theta = pi/2 (observables in the sigma1-sigma2 plane).
  static MeasurementAngles planar(const std::array<double, 4>& phis);

  // theta into [0, pi] is assumed; phi reduced into [0, 2*pi).
  MeasurementAngles canonical() const;
};

// n . sigma with Bloch vector (sin t cos p, sin t sin p, cos t); Hermitian
// with eigenvalues +-1.
Matrix2 observable_from_angles(double theta, double phi);

// Spectral projectors onto the -1 (p0) and +1 (p1) eigenspaces.
struct ProjectorPair {
  Matrix2 p0;
  Matrix2 p1;
};

ProjectorPair projectors(const Matrix2& observable);

// Shared two-qubit state of the advisor; default is the Bell state
// (|00> + |11>)/sqrt(2).
struct AdvisorState {
  Matrix4 rho;

  static AdvisorState bell_state();
  static AdvisorState from_pure(const Eigen::Vector4cd& psi);
};

// Tr(rho (A^{y_A}_{x_A} (x) B^{y_B}_{x_B})), with outcome y mapped to the
// +1 projector when y = 1.
double outcome_probability(const AdvisorState& state, const MeasurementAngles& angles,
                           TypeProfile x, ActionProfile y);

RealDistribution quantum_distribution(const AdvisorState& state,
                                      const MeasurementAngles& angles);

// Direct 64-term sum over (x, y); the oracle every closed form is tested
// against.
std::pair<double, double> quantum_payoffs_trace(const UtilityTable& table,
                                                const AdvisorState& state,
                                                const MeasurementAngles& angles);

// The two closed-form payoffs for the Bell state with all theta = pi/2.
std::pair<double, double> quantum_payoffs_closed(const GameParams& params,
                                                 const std::array<double, 4>& phis);

// The common payoff F of the fairness-constrained game (both closed forms
// coincide when the fairness residual vanishes).
double fair_payoff_closed(const GameParams& params, const std::array<double, 4>& phis);

// Analytic gradient of fair_payoff_closed in the four phi.
std::array<double, 4> fair_payoff_gradient(const GameParams& params,
                                           const std::array<double, 4>& phis);

// phi_{1,2} += chi1, phi_{3,4} += chi2; requires chi1 + chi2 = 2*pi*n
// (throws InvalidPhase otherwise). Payoffs are invariant under the result.
MeasurementAngles phase_shift(const MeasurementAngles& angles, double chi1, double chi2);

// The analytic family of payoff maxima, indexed by integers (n, r, s) with
// n + 3r - s = 0 or 1 (mod 4); throws InvalidIndices otherwise. The free
// phase is fixed by phi1 = 0.
std::array<double, 4> equilibrium_family(int n, int r, int s);

struct QuantumEquilibrium {
  std::array<double, 4> phis{};
  double payoff_per_player = 0.0;
  double chsh_value = 0.0;
  std::optional<std::array<int, 3>> family_indices;
};

struct OptimizerOptions {
  double grid_step = M_PI / 32.0;
  double gradient_tolerance = 1e-10;
  int max_refine_iterations = 100;
};

// Grid search over the three gauge-reduced phases followed by Newton
// refinement of the smooth closed form. Requires the fairness constraint to
// hold exactly (throws ConstraintViolated) and 2s1 < s2 + s3 (throws
// SignAssumptionViolated).
QuantumEquilibrium maximize_fair_payoff(const GameParams& params,
                                        const OptimizerOptions& options = {});

// First signed CHSH combination of the quantum distribution; throws
// BoundViolated if |value| exceeds 2*sqrt(2) + 1e-9.
double tsirelson_check(const AdvisorState& state, const MeasurementAngles& angles);

// Exact optimum values in the ring a + b*sqrt(2).
RootTwo fair_payoff_optimum(const GameParams& params);    // per player
RootTwo total_payoff_optimum(const GameParams& params);   // both players
RootTwo quantum_advantage(const GameParams& params);      // optimum minus classical bound

}  // namespace qgame
