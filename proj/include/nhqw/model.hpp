#pragma once

#include <Eigen/Dense>
#include <complex>

#include "nhqw/errors.hpp"

namespace nhqw {

using Complex = std::complex<double>;

/// Wrap an angle into the canonical range (-pi, pi].
double wrap_angle(double a);

/// Rotation angles (radians) of one bulk region. Canonicalized to (-pi, pi]
/// on construction.
struct CoinParams {
  double theta1;
  double theta2;

  CoinParams(double theta1_rad, double theta2_rad)
      : theta1(wrap_angle(theta1_rad)), theta2(wrap_angle(theta2_rad)) {}

  /// Angles given as multiples of pi (the convention used on all external
  /// interfaces; 0.4375 means 0.4375*pi).
  static CoinParams from_pi_units(double theta1_pi, double theta2_pi);
};

enum class Boundary { Open, Periodic };

/// Full walk specification. Site x uses `left` parameters iff x < 0 and
/// `right` iff x >= 0, so the domain wall sits between x = -1 and x = 0.
/// The lattice covers x in [-n_left, n_right - 1].
struct WalkConfig {
  CoinParams left;
  CoinParams right;
  double gamma;   // loss parameter, >= 0
  int n_left;     // sites with x < 0, >= 0
  int n_right;    // sites with x >= 0, >= 1
  Boundary boundary;

  WalkConfig(CoinParams left_params, CoinParams right_params, double gamma_in,
             int n_left_in, int n_right_in, Boundary boundary_in);

  int num_sites() const { return n_left + n_right; }
  int dim() const { return 2 * num_sites(); }
  int x_min() const { return -n_left; }
  int x_max() const { return n_right - 1; }

  /// Flat storage index of site x (amplitude components 2*i and 2*i + 1).
  int site_index(int x) const { return x + n_left; }
  const CoinParams& params_at(int x) const { return x < 0 ? left : right; }
};

enum class StepVariant {
  Balanced,  // gain/loss factor M = diag(e^gamma, e^-gamma)
  Lossy,     // loss-only factor M_E = diag(1, sqrt(1-p)); M = e^gamma M_E
};

/// Dense one-step Floquet operator over the basis |x> (x) |c>, c in {0, 1},
/// with flat index 2*site_index(x) + c.
struct StepOperator {
  Eigen::MatrixXcd matrix;
  StepVariant variant;
  double gamma;
};

/// Loss probability p = 1 - e^{-4 gamma} of the polarization-selective loss
/// element; round-trips with gamma = -ln(1-p)/4.
double loss_fraction(double gamma);

/// Build the 2N x 2N operator R(th1/2) S2 R(th2/2) M R(th2/2) S1 R(th1/2)
/// with site-local half-angle coin rotations. S1 maps |x>|1> -> |x+1>|1>,
/// S2 maps |x>|0> -> |x-1>|0>. Under Open boundaries each shift factor is
/// truncated independently: amplitudes leaving [-n_left, n_right-1] are
/// annihilated. Under Periodic boundaries site indices wrap mod N.
StepOperator build_step_operator(const WalkConfig& config, StepVariant variant);

/// Rescale a Lossy operator to the Balanced one: U = e^gamma U_E.
/// Throws ContractError if `op` is not Lossy or was built with a different
/// gamma.
StepOperator balanced_from_lossy(const StepOperator& op, double gamma);

/// Apply one walk step in factored form (O(N) per call). For the Lossy
/// variant returns the probability removed by the loss factor, recorded
/// right after M_E acts inside the step; returns 0 for Balanced.
/// `state` has layout 2*site_index(x) + c and size config.dim().
double apply_step(Eigen::VectorXcd& state, const WalkConfig& config,
                  StepVariant variant);

}  // namespace nhqw
