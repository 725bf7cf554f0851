#include "nhqw/model.hpp"

#include <cmath>
#include <numbers>

namespace nhqw {

namespace {

constexpr double kPi = std::numbers::pi;

/// Per-config trig tables so repeated step applications avoid re-evaluating
/// site-local rotations.
struct StepTables {
  Eigen::VectorXd c1, s1;  // cos/sin of theta1/2 per site
  Eigen::VectorXd c2, s2;  // cos/sin of theta2/2 per site
  double gain;             // e^{+gamma}
  double drop;             // e^{-gamma}
  double damp;             // e^{-2 gamma} = sqrt(1 - p)

  explicit StepTables(const WalkConfig& config) {
    const int n = config.num_sites();
    c1.resize(n); s1.resize(n); c2.resize(n); s2.resize(n);
    for (int x = config.x_min(); x <= config.x_max(); ++x) {
      const CoinParams& cp = config.params_at(x);
      const int i = config.site_index(x);
      c1[i] = std::cos(cp.theta1 / 2);
      s1[i] = std::sin(cp.theta1 / 2);
      c2[i] = std::cos(cp.theta2 / 2);
      s2[i] = std::sin(cp.theta2 / 2);
    }
    gain = std::exp(config.gamma);
    drop = std::exp(-config.gamma);
    damp = std::exp(-2.0 * config.gamma);
  }
};

void rotate(Eigen::VectorXcd& psi, const Eigen::VectorXd& c,
            const Eigen::VectorXd& s) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    const Complex a0 = psi[2 * i];
    const Complex a1 = psi[2 * i + 1];
    psi[2 * i] = c[i] * a0 - s[i] * a1;
    psi[2 * i + 1] = s[i] * a0 + c[i] * a1;
  }
}

/// S1: coin-1 amplitudes move one site to the right.
void shift_coin1_right(Eigen::VectorXcd& psi, int n, Boundary boundary) {
  const Complex last = psi[2 * (n - 1) + 1];
  for (int i = n - 1; i >= 1; --i) psi[2 * i + 1] = psi[2 * (i - 1) + 1];
  psi[1] = boundary == Boundary::Periodic ? last : Complex(0.0);
}

/// S2: coin-0 amplitudes move one site to the left.
void shift_coin0_left(Eigen::VectorXcd& psi, int n, Boundary boundary) {
  const Complex first = psi[0];
  for (int i = 0; i < n - 1; ++i) psi[2 * i] = psi[2 * (i + 1)];
  psi[2 * (n - 1)] = boundary == Boundary::Periodic ? first : Complex(0.0);
}

double apply_step_tables(Eigen::VectorXcd& psi, const WalkConfig& config,
                         const StepTables& tables, StepVariant variant) {
  const int n = config.num_sites();
  rotate(psi, tables.c1, tables.s1);
  shift_coin1_right(psi, n, config.boundary);
  rotate(psi, tables.c2, tables.s2);

  double removed = 0.0;
  if (variant == StepVariant::Lossy) {
    const double p = 1.0 - tables.damp * tables.damp;
    for (int i = 0; i < n; ++i) {
      removed += p * std::norm(psi[2 * i + 1]);
      psi[2 * i + 1] *= tables.damp;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      psi[2 * i] *= tables.gain;
      psi[2 * i + 1] *= tables.drop;
    }
  }

  rotate(psi, tables.c2, tables.s2);
  shift_coin0_left(psi, n, config.boundary);
  rotate(psi, tables.c1, tables.s1);
  return removed;
}

}  // namespace

double wrap_angle(double a) {
  double r = std::remainder(a, 2.0 * kPi);  // in [-pi, pi]
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

CoinParams CoinParams::from_pi_units(double theta1_pi, double theta2_pi) {
  return CoinParams(theta1_pi * kPi, theta2_pi * kPi);
}

WalkConfig::WalkConfig(CoinParams left_params, CoinParams right_params,
                       double gamma_in, int n_left_in, int n_right_in,
                       Boundary boundary_in)
    : left(left_params),
      right(right_params),
      gamma(gamma_in),
      n_left(n_left_in),
      n_right(n_right_in),
      boundary(boundary_in) {
  if (!(gamma >= 0.0))
    throw ConfigError("WalkConfig: gamma must be >= 0");
  if (n_left < 0)
    throw ConfigError("WalkConfig: n_left must be >= 0");
  if (n_right < 1)
    throw ConfigError("WalkConfig: n_right must be >= 1");
  if (num_sites() < 2)
    throw ConfigError("WalkConfig: total sites must be >= 2");
}

double loss_fraction(double gamma) {
  if (!(gamma >= 0.0))
    throw DomainError("loss_fraction: gamma must be >= 0");
  return -std::expm1(-4.0 * gamma);
}

double apply_step(Eigen::VectorXcd& state, const WalkConfig& config,
                  StepVariant variant) {
  if (state.size() != config.dim())
    throw DomainError("apply_step: state size does not match config");
  const StepTables tables(config);
  return apply_step_tables(state, config, tables, variant);
}

StepOperator build_step_operator(const WalkConfig& config,
                                 StepVariant variant) {
  const int dim = config.dim();
  const StepTables tables(config);
  Eigen::MatrixXcd matrix(dim, dim);
  Eigen::VectorXcd column(dim);
  for (int j = 0; j < dim; ++j) {
    column.setZero();
    column[j] = 1.0;
    apply_step_tables(column, config, tables, variant);
    matrix.col(j) = column;
  }
  return StepOperator{std::move(matrix), variant, config.gamma};
}

StepOperator balanced_from_lossy(const StepOperator& op, double gamma) {
  if (op.variant != StepVariant::Lossy)
    throw ContractError("balanced_from_lossy: operator is not Lossy");
  if (op.gamma != gamma)
    throw ContractError("balanced_from_lossy: gamma mismatch");
  return StepOperator{std::exp(gamma) * op.matrix, StepVariant::Balanced,
                      gamma};
}

}  // namespace nhqw
