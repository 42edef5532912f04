#include "qgame/quantum.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "qgame/classical.hpp"
#include "qgame/errors.hpp"

namespace qgame {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_angle(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0) w += kTwoPi;
  return w;
}

// Kronecker product, Alice on the first factor.
Matrix4 kron(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

int angle_slot(PlayerId who, int type) {
  return (who == PlayerId::A ? 0 : 2) + type;
}

}  // namespace

MeasurementAngles MeasurementAngles::planar(const std::array<double, 4>& phis) {
  MeasurementAngles a;
  a.theta = {M_PI / 2, M_PI / 2, M_PI / 2, M_PI / 2};
  a.phi = phis;
  return a;
}

MeasurementAngles MeasurementAngles::canonical() const {
  MeasurementAngles a = *this;
  for (double& p : a.phi) p = wrap_angle(p);
  return a;
}

Matrix2 observable_from_angles(double theta, double phi) {
  using namespace std::complex_literals;
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  Matrix2 m;
  m << ct, st * std::exp(-1i * phi), st * std::exp(1i * phi), -ct;
  return m;
}

ProjectorPair projectors(const Matrix2& observable) {
  const Matrix2 id = Matrix2::Identity();
  return {(id - observable) / 2.0, (id + observable) / 2.0};
}

AdvisorState AdvisorState::bell_state() {
  Eigen::Vector4cd psi;
  psi << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
  return from_pure(psi);
}

AdvisorState AdvisorState::from_pure(const Eigen::Vector4cd& psi) {
  return AdvisorState{psi * psi.adjoint()};
}

double outcome_probability(const AdvisorState& state, const MeasurementAngles& angles,
                           TypeProfile x, ActionProfile y) {
  const int ia = angle_slot(PlayerId::A, x.alice);
  const int ib = angle_slot(PlayerId::B, x.bob);
  const auto pa = projectors(observable_from_angles(angles.theta[ia], angles.phi[ia]));
  const auto pb = projectors(observable_from_angles(angles.theta[ib], angles.phi[ib]));
  const Matrix2& proj_a = y.alice == 1 ? pa.p1 : pa.p0;
  const Matrix2& proj_b = y.bob == 1 ? pb.p1 : pb.p0;
  return (state.rho * kron(proj_a, proj_b)).trace().real();
}

RealDistribution quantum_distribution(const AdvisorState& state,
                                      const MeasurementAngles& angles) {
  RealDistribution d;
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb)
      for (int ya = 0; ya < 2; ++ya)
        for (int yb = 0; yb < 2; ++yb)
          d.at({xa, xb}, {ya, yb}) =
              outcome_probability(state, angles, {xa, xb}, {ya, yb});
  return d;
}

std::pair<double, double> quantum_payoffs_trace(const UtilityTable& table,
                                                const AdvisorState& state,
                                                const MeasurementAngles& angles) {
  return classical_payoffs(table, quantum_distribution(state, angles));
}

std::pair<double, double> quantum_payoffs_closed(const GameParams& params,
                                                 const std::array<double, 4>& phis) {
  const double k = to_double(2 * params.s1 - params.s2 - params.s3);
  const double d = to_double(params.s5 - params.s6 - params.s7 + params.s8);
  const double free_term =
      2.0 * to_double(params.s2 + params.s3 + 2 * params.s5 + 2 * params.s9 +
                      2 * params.s13);
  const double c13 = std::cos(phis[0] + phis[2]);
  const double c23 = std::cos(phis[1] + phis[2]);
  const double c14 = std::cos(phis[0] + phis[3]);
  const double c24 = std::cos(phis[1] + phis[3]);
  const double fa = ((c13 + 2 * c23 - c24) * k + (c14 - c23) * d + free_term) / 16.0;
  const double fb = ((c13 + 2 * c14 - c24) * k + (c23 - c14) * d + free_term) / 16.0;
  return {fa, fb};
}

double fair_payoff_closed(const GameParams& params, const std::array<double, 4>& phis) {
  const double k = to_double(2 * params.s1 - params.s2 - params.s3);
  const double c = std::cos(phis[0] + phis[2]) + std::cos(phis[1] + phis[2]) +
                   std::cos(phis[0] + phis[3]) - std::cos(phis[1] + phis[3]);
  const double free_term = to_double(2 * params.s2 + 2 * params.s3 + 4 * params.s5 +
                                     4 * params.s9 + 4 * params.s13);
  return (k * c + free_term) / 16.0;
}

std::array<double, 4> fair_payoff_gradient(const GameParams& params,
                                           const std::array<double, 4>& phis) {
  const double k = to_double(2 * params.s1 - params.s2 - params.s3);
  const double s13 = std::sin(phis[0] + phis[2]);
  const double s23 = std::sin(phis[1] + phis[2]);
  const double s14 = std::sin(phis[0] + phis[3]);
  const double s24 = std::sin(phis[1] + phis[3]);
  return {-k * (s13 + s14) / 16.0, -k * (s23 - s24) / 16.0,
          -k * (s13 + s23) / 16.0, -k * (s14 - s24) / 16.0};
}

MeasurementAngles phase_shift(const MeasurementAngles& angles, double chi1, double chi2) {
  if (std::abs(std::remainder(chi1 + chi2, kTwoPi)) > 1e-9)
    throw InvalidPhase("chi1 + chi2 must be a multiple of 2*pi");
  MeasurementAngles shifted = angles;
  shifted.phi[0] += chi1;
  shifted.phi[1] += chi1;
  shifted.phi[2] += chi2;
  shifted.phi[3] += chi2;
  return shifted;
}

std::array<double, 4> equilibrium_family(int n, int r, int s) {
  const int m = ((n + 3 * r - s) % 4 + 4) % 4;
  if (m != 0 && m != 1)
    throw InvalidIndices("n + 3r - s must be 0 or 1 mod 4, got residue " +
                         std::to_string(m));
  // First printed sum equation read as phi1 + phi3 (the phi1 + phi2 form is a
  // misprint: the payoff depends on phi1 + phi3 only); phi1 fixed to 0.
  const double phi1 = 0.0;
  const double phi3 = M_PI / 4 + (3 * n + r + s + 2) * M_PI / 2 - phi1;
  const double phi2 = -M_PI / 4 + (n - r + 3 * s + 2) * M_PI / 2 - phi3;
  const double phi4 = -M_PI / 4 + (n + 3 * r - s + 2) * M_PI / 2 - phi1;
  return {wrap_angle(phi1), wrap_angle(phi2), wrap_angle(phi3), wrap_angle(phi4)};
}

QuantumEquilibrium maximize_fair_payoff(const GameParams& params,
                                        const OptimizerOptions& options) {
  if (check_fairness_constraint(params) != 0)
    throw ConstraintViolated("fairness constraint violated: F_A != F_B");
  if (2 * params.s1 >= params.s2 + params.s3)
    throw SignAssumptionViolated("2s1 >= s2 + s3: no quantum advantage regime");

  // Coarse grid over the three gauge-reduced phases (phi1 = 0). On the
  // lattice every cosine argument is a multiple of the step, so one table
  // serves all grid points.
  const int n = std::max(4, static_cast<int>(std::lround(kTwoPi / options.grid_step)));
  std::vector<double> cos_table(n);
  for (int i = 0; i < n; ++i) cos_table[i] = std::cos(kTwoPi * i / n);

  // 2s1 - s2 - s3 < 0, so the payoff is maximal where the cosine
  // combination is minimal.
  double best_c = std::numeric_limits<double>::infinity();
  std::array<int, 3> best{};
  for (int k2 = 0; k2 < n; ++k2)
    for (int k3 = 0; k3 < n; ++k3) {
      const double partial = cos_table[k3] + cos_table[(k2 + k3) % n];
      for (int k4 = 0; k4 < n; ++k4) {
        const double c = partial + cos_table[k4] - cos_table[(k2 + k4) % n];
        if (c < best_c) {
          best_c = c;
          best = {k2, k3, k4};
        }
      }
    }

  std::array<double, 4> phis = {0.0, kTwoPi * best[0] / n, kTwoPi * best[1] / n,
                                kTwoPi * best[2] / n};

  // Newton refinement of C(phi2, phi3, phi4) with a gradient-descent
  // fallback away from the quadratic basin.
  auto c_value = [](const std::array<double, 4>& p) {
    return std::cos(p[0] + p[2]) + std::cos(p[1] + p[2]) + std::cos(p[0] + p[3]) -
           std::cos(p[1] + p[3]);
  };
  const double k_coef = to_double(2 * params.s1 - params.s2 - params.s3);
  for (int iter = 0; iter < options.max_refine_iterations; ++iter) {
    const double s13 = std::sin(phis[0] + phis[2]);
    const double s23 = std::sin(phis[1] + phis[2]);
    const double s14 = std::sin(phis[0] + phis[3]);
    const double s24 = std::sin(phis[1] + phis[3]);
    Eigen::Vector3d grad(-s23 + s24, -s13 - s23, -s14 + s24);
    // Gradient of the payoff itself is k/16 times grad C.
    if ((std::abs(k_coef) / 16.0) * grad.norm() < options.gradient_tolerance) break;

    const double c13 = std::cos(phis[0] + phis[2]);
    const double c23 = std::cos(phis[1] + phis[2]);
    const double c14 = std::cos(phis[0] + phis[3]);
    const double c24 = std::cos(phis[1] + phis[3]);
    Eigen::Matrix3d hess;
    hess << -c23 + c24, -c23, c24,
            -c23, -c13 - c23, 0.0,
            c24, 0.0, -c14 + c24;
    Eigen::Vector3d step = hess.fullPivLu().solve(-grad);
    auto apply = [&](const Eigen::Vector3d& delta) {
      std::array<double, 4> next = phis;
      next[1] += delta[0];
      next[2] += delta[1];
      next[3] += delta[2];
      return next;
    };
    std::array<double, 4> next = apply(step);
    if (!(c_value(next) < c_value(phis))) {
      // Backtracking descent on C.
      double rate = 0.5;
      next = apply(-rate * grad);
      while (rate > 1e-12 && !(c_value(next) < c_value(phis))) {
        rate /= 2;
        next = apply(-rate * grad);
      }
      if (rate <= 1e-12) break;
    }
    phis = next;
  }
  for (double& p : phis) p = wrap_angle(p);

  QuantumEquilibrium eq;
  eq.phis = phis;
  eq.payoff_per_player = fair_payoff_closed(params, phis);
  eq.chsh_value =
      tsirelson_check(AdvisorState::bell_state(), MeasurementAngles::planar(phis));
  return eq;
}

double tsirelson_check(const AdvisorState& state, const MeasurementAngles& angles) {
  const double value = bell_values(quantum_distribution(state, angles))[0];
  if (std::abs(value) > kTsirelsonBound + 1e-9)
    throw BoundViolated("CHSH value " + std::to_string(value) +
                        " exceeds the Tsirelson bound");
  return value;
}

RootTwo fair_payoff_optimum(const GameParams& p) {
  const Rational gap = p.s2 + p.s3 - 2 * p.s1;
  return {(2 * (p.s2 + p.s3) + 4 * (p.s5 + p.s9 + p.s13)) / 16, 2 * gap / 16};
}

RootTwo total_payoff_optimum(const GameParams& p) {
  RootTwo f = fair_payoff_optimum(p);
  return {2 * f.a, 2 * f.b};
}

RootTwo quantum_advantage(const GameParams& p) {
  const Rational gap = p.s2 + p.s3 - 2 * p.s1;
  return {-gap / 4, gap / 4};
}

}  // namespace qgame
