#pragma once

#include <Eigen/Dense>
#include <vector>

#include "nhqw/model.hpp"

namespace nhqw {

/// Initial condition and duration of a stroboscopic run. DomainWall starts
/// at x = 0 next to the wall; Bulk starts at x = x0 away from it. The coin
/// starts in the basis state `coin` (default |0>).
struct SchemeSpec {
  enum class Scheme { DomainWall, Bulk };
  Scheme scheme = Scheme::DomainWall;
  int x0 = 6;
  int coin = 0;
  int steps = 7;

  int start_site() const { return scheme == Scheme::Bulk ? x0 : 0; }
};

/// Time-indexed record of a lossy evolution. Index t runs 0..steps.
/// The probability ledger closes at every step:
/// survival[t] + cum_loss[t] = 1 to 1e-10.
struct Trajectory {
  int steps = 0;
  double gamma = 0.0;
  int n_left = 0;  // site-index offset for the rows of site_prob
  std::vector<Eigen::MatrixX2d> site_prob;  // per step: (N, 2) |amplitude|^2
  std::vector<double> survival;             // squared norm per step
  std::vector<double> loss_increment;       // removed at step t (0 at t = 0)
  std::vector<double> cum_loss;
  Eigen::VectorXcd final_state;

  int num_sites() const { return static_cast<int>(site_prob.empty() ? 0 : site_prob.front().rows()); }
};

/// Open-boundary lattice sized so the light cone never reaches an edge:
/// margin of steps + 2 sites on each side of the start site.
WalkConfig sized_for(const CoinParams& left, const CoinParams& right,
                     double gamma, const SchemeSpec& spec);

/// Apply the Lossy step operator spec.steps times, recording site-resolved
/// probabilities and the per-step loss ledger. Throws ConfigError when the
/// lattice margins are smaller than steps + 2 on either side of the start
/// site (boundary truncation would contaminate the bulk dynamics).
Trajectory evolve(const WalkConfig& config, const SchemeSpec& spec);

/// Corrected total probability P(t) = e^{2 gamma t} * survival(t).
std::vector<double> corrected_total(const Trajectory& traj, double gamma);

/// Corrected on-site probability P_x0(t) = e^{2 gamma t} * (site-x0 survival,
/// both coin components). Throws DomainError when x0 is outside the lattice.
std::vector<double> corrected_site(const Trajectory& traj, double gamma, int x0);

}  // namespace nhqw
