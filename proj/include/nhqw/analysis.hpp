#pragma once

#include <vector>

#include "nhqw/bandtheory.hpp"
#include "nhqw/dynamics.hpp"
#include "nhqw/spectra.hpp"

namespace nhqw {

/// Least-squares fit of a probability series in log space.
/// Exponential: f(t) = amplitude * e^{param * t} (param is the rate alpha).
/// PowerLaw:    f(t) = amplitude * t^{-param}    (param is the exponent delta).
struct FitResult {
  enum class Model { Exponential, PowerLaw };
  Model model;
  double param;
  double amplitude;
  double accumulated_variance;  // sum_t [P(t) - f(t)]^2 / f(t)^2 on the window
  int t_lo;
  int t_hi;

  double evaluate(int t) const;
};

/// Fit ln P(t) against t over t in [t_lo, t_hi] with equal weights in log
/// space. `series` is indexed by t starting at 0. Requires >= 3 points and
/// P(t) > 0 on the window (DomainError otherwise).
FitResult fit_exponential(const std::vector<double>& series, int t_lo, int t_hi);

/// Fit ln P(t) against ln t over t in [t_lo, t_hi], t_lo >= 1.
FitResult fit_power_law(const std::vector<double>& series, int t_lo, int t_hi);

/// sum_t [P(t) - f(t)]^2 / f(t)^2 over the fit's own window.
double accumulated_variance(const std::vector<double>& series,
                            const FitResult& fit);

/// Fixed parameters of an exceptional-point scan over theta2_right.
struct EpSearch {
  CoinParams left;
  double theta1_right;  // radians
  double gamma;
  SchemeSpec::Scheme scheme = SchemeSpec::Scheme::DomainWall;
  int steps = 7;
  int x0 = 6;
};

struct EpEstimate {
  enum class Criterion { ProbabilityUnity, ZeroExponent, SpectralZero, Analytic };
  double theta2_star_pi;  // units of pi
  Criterion criterion;
  double lo_pi;
  double hi_pi;
};

/// Locate an exceptional point by bisection of the criterion indicator over
/// theta2_right in [lo_pi, hi_pi] (units of pi), to a bracket width of
/// 1e-4 pi. Indicators: ProbabilityUnity uses P(steps) - 1 of a domain-wall
/// run; ZeroExponent uses the fitted exponent alpha of a bulk run at x0;
/// SpectralZero uses max Im E (GBZ) against a 1e-6 threshold; Analytic
/// evaluates arccos(tanh gamma) and picks the EP branch inside the bracket.
/// Throws BracketingError when the indicator does not change sign.
EpEstimate locate_ep(const EpSearch& search, EpEstimate::Criterion criterion,
                     double lo_pi, double hi_pi);

struct GridSpec {
  int n_theta1 = 101;
  int n_theta2 = 101;
  double theta1_min_pi = -1.0;
  double theta1_max_pi = 1.0;
  double theta2_min_pi = -1.0;
  double theta2_max_pi = 1.0;
};

/// max Im E over a grid of right-region angles, with the left region fixed.
/// Grid cells are independent and are distributed over `threads` workers;
/// assembly is deterministic by grid index.
PhaseDiagram phase_diagram(double gamma, const CoinParams& left,
                           const GridSpec& grid, SpectrumMethod method,
                           int threads = 1);

}  // namespace nhqw
