#include "nhqw/dynamics.hpp"

#include <cmath>

namespace nhqw {

namespace {

void check_margins(const WalkConfig& config, const SchemeSpec& spec) {
  const int start = spec.start_site();
  if (start < config.x_min() || start > config.x_max())
    throw ConfigError("evolve: start site outside the lattice");
  if (spec.coin != 0 && spec.coin != 1)
    throw ConfigError("evolve: coin must be 0 or 1");
  if (spec.steps < 0) throw ConfigError("evolve: steps must be >= 0");
  const int margin = spec.steps + 2;
  if (start - config.x_min() < margin || config.x_max() - start < margin)
    throw ConfigError(
        "evolve: lattice margin smaller than steps + 2; boundary truncation "
        "would reach the light cone");
}

}  // namespace

WalkConfig sized_for(const CoinParams& left, const CoinParams& right,
                     double gamma, const SchemeSpec& spec) {
  const int start = spec.start_site();
  const int margin = spec.steps + 2;
  const int n_left = std::max(0, margin - start);
  const int n_right = start + margin + 1;
  return WalkConfig(left, right, gamma, n_left, n_right, Boundary::Open);
}

Trajectory evolve(const WalkConfig& config, const SchemeSpec& spec) {
  check_margins(config, spec);

  const int n = config.num_sites();
  Eigen::VectorXcd state = Eigen::VectorXcd::Zero(config.dim());
  state[2 * config.site_index(spec.start_site()) + spec.coin] = 1.0;

  Trajectory traj;
  traj.steps = spec.steps;
  traj.gamma = config.gamma;
  traj.n_left = config.n_left;
  traj.site_prob.reserve(spec.steps + 1);
  traj.survival.reserve(spec.steps + 1);
  traj.loss_increment.reserve(spec.steps + 1);
  traj.cum_loss.reserve(spec.steps + 1);

  auto record = [&](double removed) {
    Eigen::MatrixX2d prob(n, 2);
    for (int i = 0; i < n; ++i) {
      prob(i, 0) = std::norm(state[2 * i]);
      prob(i, 1) = std::norm(state[2 * i + 1]);
    }
    traj.site_prob.push_back(std::move(prob));
    traj.survival.push_back(state.squaredNorm());
    traj.loss_increment.push_back(removed);
    traj.cum_loss.push_back(
        traj.cum_loss.empty() ? removed : traj.cum_loss.back() + removed);
  };

  record(0.0);
  for (int t = 1; t <= spec.steps; ++t) {
    const double removed = apply_step(state, config, StepVariant::Lossy);
    record(removed);
  }
  traj.final_state = std::move(state);
  return traj;
}

std::vector<double> corrected_total(const Trajectory& traj, double gamma) {
  std::vector<double> out(traj.survival.size());
  for (std::size_t t = 0; t < out.size(); ++t)
    out[t] = std::exp(2.0 * gamma * static_cast<double>(t)) * traj.survival[t];
  return out;
}

std::vector<double> corrected_site(const Trajectory& traj, double gamma,
                                   int x0) {
  const int i = x0 + traj.n_left;
  if (traj.site_prob.empty() || i < 0 || i >= traj.site_prob.front().rows())
    throw DomainError("corrected_site: x0 outside the lattice");
  std::vector<double> out(traj.site_prob.size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    const double site = traj.site_prob[t](i, 0) + traj.site_prob[t](i, 1);
    out[t] = std::exp(2.0 * gamma * static_cast<double>(t)) * site;
  }
  return out;
}

}  // namespace nhqw
