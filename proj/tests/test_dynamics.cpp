#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "nhqw/dynamics.hpp"
#include "nhqw/model.hpp"
#include "nhqw/spectra.hpp"
#include "test_util.hpp"

using namespace nhqw;
using nhqw_test::kPi;

namespace {

const double kGamma = 0.2746;
const CoinParams kLeft = CoinParams::from_pi_units(-0.0625, 0.75);
const CoinParams kRightBroken = CoinParams::from_pi_units(0.5625, 0.45);
const CoinParams kRightExact = CoinParams::from_pi_units(0.5625, 0.40);

SchemeSpec wall_spec(int steps) {
  SchemeSpec s;
  s.scheme = SchemeSpec::Scheme::DomainWall;
  s.steps = steps;
  return s;
}

SchemeSpec bulk_spec(int steps, int x0) {
  SchemeSpec s;
  s.scheme = SchemeSpec::Scheme::Bulk;
  s.steps = steps;
  s.x0 = x0;
  return s;
}

}  // namespace

TEST_CASE("sized_for produces exactly steps + 2 margins") {
  const SchemeSpec wall = wall_spec(7);
  const WalkConfig cw = sized_for(kLeft, kRightBroken, kGamma, wall);
  CHECK(cw.n_left == 9);
  CHECK(cw.n_right == 10);
  CHECK_NOTHROW(evolve(cw, wall));

  const SchemeSpec bulk = bulk_spec(7, 6);
  const WalkConfig cb = sized_for(kLeft, kRightBroken, kGamma, bulk);
  CHECK(cb.n_left == 3);
  CHECK(cb.n_right == 16);
  CHECK_NOTHROW(evolve(cb, bulk));

  SUBCASE("one site short on either side is rejected") {
    const WalkConfig tight(kLeft, kRightBroken, kGamma, cw.n_left - 1,
                           cw.n_right, Boundary::Open);
    CHECK_THROWS_AS(evolve(tight, wall), ConfigError);
    const WalkConfig tight2(kLeft, kRightBroken, kGamma, cw.n_left,
                            cw.n_right - 1, Boundary::Open);
    CHECK_THROWS_AS(evolve(tight2, wall), ConfigError);
  }

  SUBCASE("start site outside the lattice") {
    CHECK_THROWS_AS(evolve(cw, bulk_spec(7, 50)), ConfigError);
  }
}

TEST_CASE("trajectory basics") {
  const SchemeSpec spec = wall_spec(7);
  const WalkConfig config = sized_for(kLeft, kRightBroken, kGamma, spec);
  const Trajectory traj = evolve(config, spec);

  SUBCASE("t = 0: unit probability, no loss") {
    CHECK(traj.survival[0] == 1.0);
    CHECK(traj.loss_increment[0] == 0.0);
    CHECK(corrected_total(traj, kGamma)[0] == 1.0);
  }

  SUBCASE("probability ledger closes at every step") {
    for (int t = 0; t <= traj.steps; ++t)
      CHECK(std::abs(traj.survival[t] + traj.cum_loss[t] - 1.0) < 1e-10);
  }

  SUBCASE("light cone: exact zeros outside |x| <= t") {
    for (int t = 0; t <= traj.steps; ++t) {
      for (int i = 0; i < traj.num_sites(); ++i) {
        const int x = i - traj.n_left;
        if (std::abs(x) > t) {
          CHECK(traj.site_prob[t](i, 0) == 0.0);
          CHECK(traj.site_prob[t](i, 1) == 0.0);
        }
      }
    }
  }
}

TEST_CASE("gamma = 0: lossless unitary walk") {
  const SchemeSpec spec = wall_spec(20);
  const WalkConfig config = sized_for(kLeft, kRightBroken, 0.0, spec);
  const Trajectory traj = evolve(config, spec);
  for (int t = 0; t <= traj.steps; ++t) {
    CHECK(traj.loss_increment[t] == 0.0);
    CHECK(std::abs(traj.survival[t] - 1.0) < 1e-12);
    CHECK(std::abs(corrected_total(traj, 0.0)[t] - 1.0) < 1e-12);
  }
}

TEST_CASE("lossy/balanced gauge equivalence") {
  SUBCASE("per-step survival: e^{2 gamma t} |psi_E|^2 = |psi|^2") {
    const SchemeSpec spec = wall_spec(20);
    const WalkConfig config = sized_for(kLeft, kRightBroken, kGamma, spec);
    const Trajectory traj = evolve(config, spec);

    Eigen::VectorXcd balanced = Eigen::VectorXcd::Zero(config.dim());
    balanced[2 * config.site_index(0)] = 1.0;
    for (int t = 1; t <= spec.steps; ++t) {
      apply_step(balanced, config, StepVariant::Balanced);
      const double corrected =
          std::exp(2.0 * kGamma * t) * traj.survival[t];
      CHECK(std::abs(corrected - balanced.squaredNorm()) <
            1e-12 * balanced.squaredNorm());
    }
  }

  SUBCASE("state identity e^{gamma t} U_E^t psi = U^t psi up to t = 150") {
    const SchemeSpec spec = wall_spec(150);
    const WalkConfig config = sized_for(kLeft, kRightBroken, kGamma, spec);
    Eigen::VectorXcd lossy = Eigen::VectorXcd::Zero(config.dim());
    lossy[2 * config.site_index(0)] = 1.0;
    Eigen::VectorXcd balanced = lossy;
    double worst = 0.0;
    for (int t = 1; t <= 150; ++t) {
      apply_step(lossy, config, StepVariant::Lossy);
      apply_step(balanced, config, StepVariant::Balanced);
      // Amplitudes grow to ~1e12 here, so compare relative to the state scale.
      const double scale = std::max(1.0, balanced.cwiseAbs().maxCoeff());
      const double diff =
          (std::exp(kGamma * t) * lossy - balanced).cwiseAbs().maxCoeff();
      worst = std::max(worst, diff / scale);
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("corrected probabilities across the transition") {
  SUBCASE("scheme I, broken phase: P(t) grows; exact phase: P(t) decreases") {
    const SchemeSpec spec = wall_spec(7);
    const Trajectory grow =
        evolve(sized_for(kLeft, kRightBroken, kGamma, spec), spec);
    const std::vector<double> pg = corrected_total(grow, kGamma);
    CHECK(pg[7] > pg[1]);
    CHECK(pg[7] > 1.0);

    const Trajectory decay =
        evolve(sized_for(kLeft, kRightExact, kGamma, spec), spec);
    const std::vector<double> pd = corrected_total(decay, kGamma);
    CHECK(pd[7] < pd[1]);
    CHECK(pd[7] < 1.0);
  }

  SUBCASE("scheme II on-site: P_x0(0) = 1 and net growth in the broken phase") {
    const SchemeSpec spec = bulk_spec(7, 6);
    const Trajectory traj =
        evolve(sized_for(kLeft, kRightBroken, kGamma, spec), spec);
    const std::vector<double> p = corrected_site(traj, kGamma, 6);
    CHECK(p[0] == 1.0);
    CHECK(p[7] > p[1]);
    CHECK_THROWS_AS(corrected_site(traj, kGamma, 100), DomainError);
  }

  SUBCASE("exact phase keeps P(t) bounded over 150 steps") {
    const SchemeSpec spec = wall_spec(150);
    const Trajectory traj =
        evolve(sized_for(kLeft, kRightExact, kGamma, spec), spec);
    const std::vector<double> p = corrected_total(traj, kGamma);
    double early_max = 0.0;
    for (int t = 0; t <= 20; ++t) early_max = std::max(early_max, p[t]);
    CHECK(p[150] < 2.0 * early_max);
  }
}

TEST_CASE("long-time growth rates match the band theory") {
  // The GBZ rate governs the norm when the skin states dominate (domain
  // wall); a uniform bulk with untouched margins evolves as on the infinite
  // lattice, where the Bloch spectrum sets the norm growth.
  SUBCASE("domain wall: total-norm slope approaches the GBZ max") {
    const SchemeSpec spec = wall_spec(150);
    const Trajectory traj =
        evolve(sized_for(kLeft, kRightBroken, kGamma, spec), spec);
    const std::vector<double> p = corrected_total(traj, kGamma);
    const double slope = (std::log(p[150]) - std::log(p[100])) / (2.0 * 50);
    const double gbz = max_imag_quasienergy(kLeft, kRightBroken, kGamma,
                                            SpectrumMethod::Gbz);
    CHECK(std::abs(slope - gbz) < 0.02);
  }

  SUBCASE("uniform bulk: total-norm slope approaches the Bloch max") {
    const SchemeSpec spec = bulk_spec(150, 0);
    const Trajectory traj =
        evolve(sized_for(kRightBroken, kRightBroken, kGamma, spec), spec);
    const std::vector<double> p = corrected_total(traj, kGamma);
    const double slope = (std::log(p[150]) - std::log(p[100])) / (2.0 * 50);
    double bloch_max = 0.0;
    for (const QuasiEnergy& e : bloch_spectrum(kRightBroken, kGamma, 512))
      bloch_max = std::max(bloch_max, e.imag());
    CHECK(std::abs(slope - bloch_max) < 0.02);
  }

  SUBCASE("uniform bulk: on-site slope approaches the GBZ max") {
    const SchemeSpec spec = bulk_spec(150, 0);
    const Trajectory traj =
        evolve(sized_for(kRightBroken, kRightBroken, kGamma, spec), spec);
    const std::vector<double> p = corrected_site(traj, kGamma, 0);
    const double slope = (std::log(p[150]) - std::log(p[100])) / (2.0 * 50);
    const double gbz = max_imag_quasienergy(kRightBroken, kRightBroken,
                                            kGamma, SpectrumMethod::Gbz);
    CHECK(std::abs(slope - gbz) < 0.02);
  }
}
