#include "nhqw/bandtheory.hpp"

#include <cmath>
#include <numbers>

namespace nhqw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDegenerateCosTol = 1e-12;

Eigen::Matrix2cd coin_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Eigen::Matrix2cd r;
  r << c, -s, s, c;
  return r;
}

/// Eigenvalue pair of a 2x2 matrix with det = 1, from its trace. The root of
/// smaller magnitude is computed as the reciprocal of the larger to avoid
/// cancellation.
std::pair<Complex, Complex> lambda_pair_from_trace(Complex trace) {
  const Complex disc = std::sqrt(trace * trace - 4.0);
  const Complex big =
      std::abs(trace + disc) >= std::abs(trace - disc) ? trace + disc
                                                       : trace - disc;
  const Complex l1 = big / 2.0;
  return {l1, 1.0 / l1};
}

bool degenerate_dispersion(const CoinParams& coin) {
  return std::abs(std::cos(coin.theta1)) < kDegenerateCosTol;
}

std::vector<QuasiEnergy> spectrum_on_circle(const CoinParams& coin,
                                            double gamma, double radius,
                                            int num_points) {
  if (num_points < 2)
    throw DomainError("spectrum sampling needs num_points >= 2");
  std::vector<QuasiEnergy> out;
  out.reserve(2 * static_cast<std::size_t>(num_points));

  if (degenerate_dispersion(coin)) {
    // Flat dispersion: lambda + 1/lambda independent of beta.
    const Complex trace =
        -2.0 * std::cosh(gamma) * std::sin(coin.theta1) * std::sin(coin.theta2);
    const auto [l1, l2] = lambda_pair_from_trace(trace);
    const QuasiEnergy e1 = quasienergy_from_lambda(l1);
    const QuasiEnergy e2 = quasienergy_from_lambda(l2);
    for (int j = 0; j < num_points; ++j) {
      out.push_back(e1);
      out.push_back(e2);
    }
    return out;
  }

  for (int j = 0; j < num_points; ++j) {
    const double p = 2.0 * kPi * j / num_points;
    const Complex beta = radius * Complex(std::cos(p), std::sin(p));
    const Eigen::Matrix2cd u = bloch_operator(coin, gamma, beta);
    const auto [l1, l2] = lambda_pair_from_trace(u.trace());
    out.push_back(quasienergy_from_lambda(l1));
    out.push_back(quasienergy_from_lambda(l2));
  }
  return out;
}

}  // namespace

QuasiEnergy quasienergy_from_lambda(Complex lambda) {
  if (lambda == Complex(0.0))
    throw DomainError("quasienergy_from_lambda: lambda must be nonzero");
  double re = -std::arg(lambda);  // in [-pi, pi)
  if (re <= -kPi) re = kPi;       // branch endpoint: lambda on the negative axis
  return QuasiEnergy{Complex(re, std::log(std::abs(lambda)))};
}

Eigen::Matrix2cd bloch_operator(const CoinParams& coin, double gamma,
                                Complex beta) {
  if (beta == Complex(0.0))
    throw DomainError("bloch_operator: beta must be nonzero");
  const Complex root = std::sqrt(beta);  // principal branch
  Eigen::Matrix2cd shift = Eigen::Matrix2cd::Zero();
  shift(0, 0) = root;
  shift(1, 1) = 1.0 / root;
  Eigen::Matrix2cd loss = Eigen::Matrix2cd::Zero();
  loss(0, 0) = std::exp(gamma);
  loss(1, 1) = std::exp(-gamma);
  const Eigen::Matrix2cd r1 = coin_rotation(coin.theta1 / 2);
  const Eigen::Matrix2cd r2 = coin_rotation(coin.theta2 / 2);
  return r1 * shift * r2 * loss * r2 * shift * r1;
}

double gbz_radius(double theta2, double gamma) {
  const double u = std::cosh(gamma) * std::cos(theta2) - std::sinh(gamma);
  const double v = std::cosh(gamma) * std::cos(theta2) + std::sinh(gamma);
  if (std::abs(v) < 1e-14)
    throw SingularityError("gbz_radius: divergent (cosh g cos th2 + sinh g = 0)");
  return std::sqrt(std::abs(u / v));
}

std::pair<Complex, Complex> beta_roots(const CoinParams& coin, double gamma,
                                       Complex lambda) {
  if (lambda == Complex(0.0))
    throw DomainError("beta_roots: lambda must be nonzero");
  if (degenerate_dispersion(coin))
    throw DegenerateDispersionError(
        "beta_roots: cos(theta1) = 0, dispersion is independent of beta");

  const double cosh_g = std::cosh(gamma);
  const double sinh_g = std::sinh(gamma);
  const double cos1 = std::cos(coin.theta1);
  const Complex a = -cos1 * (cosh_g * std::cos(coin.theta2) + sinh_g);
  const Complex b = lambda + 1.0 / lambda +
                    2.0 * cosh_g * std::sin(coin.theta1) * std::sin(coin.theta2);
  const Complex c = cos1 * (sinh_g - cosh_g * std::cos(coin.theta2));

  // Stable quadratic: q = -(b + sgn-matched sqrt(disc))/2, roots q/a and c/q.
  Complex disc = std::sqrt(b * b - 4.0 * a * c);
  if (std::abs(b + disc) < std::abs(b - disc)) disc = -disc;
  const Complex q = -0.5 * (b + disc);
  Complex r1, r2;
  if (q == Complex(0.0)) {  // b = 0 and a c = 0 cannot happen here; c = 0 can
    r1 = Complex(0.0);
    r2 = -b / a;
  } else {
    r1 = q / a;
    r2 = c / q;
  }
  if (std::abs(r1) > std::abs(r2)) std::swap(r1, r2);
  return {r1, r2};
}

std::vector<QuasiEnergy> nonbloch_spectrum(const CoinParams& coin, double gamma,
                                           int num_points) {
  if (degenerate_dispersion(coin))
    return spectrum_on_circle(coin, gamma, 1.0, num_points);
  const double radius = gbz_radius(coin.theta2, gamma);
  if (radius == 0.0)
    throw SingularityError(
        "nonbloch_spectrum: GBZ radius is 0 (exceptional point)");
  return spectrum_on_circle(coin, gamma, radius, num_points);
}

std::vector<QuasiEnergy> bloch_spectrum(const CoinParams& coin, double gamma,
                                        int num_k) {
  return spectrum_on_circle(coin, gamma, 1.0, num_k);
}

Complex trace_deviation(const CoinParams& coin, double gamma,
                        double gbz_angle) {
  const double r = gbz_radius(coin.theta2, gamma);
  const double u = std::cosh(gamma) * std::cos(coin.theta2) - std::sinh(gamma);
  const double v = std::cosh(gamma) * std::cos(coin.theta2) + std::sinh(gamma);
  const double bracket = -u / r + r * v;
  return Complex(0.0, 2.0 * std::cos(coin.theta1) * std::sin(gbz_angle) *
                          bracket);
}

PtClassification pt_classify(const CoinParams& coin, double gamma) {
  constexpr double tol = 1e-9;
  const double margin =
      std::abs(std::cos(coin.theta2)) - std::abs(std::tanh(gamma));
  PtClassification::Phase phase = PtClassification::Phase::Boundary;
  if (margin > tol)
    phase = PtClassification::Phase::Exact;
  else if (margin < -tol)
    phase = PtClassification::Phase::Broken;
  return {phase, margin};
}

double exceptional_theta2(double gamma) {
  if (!(gamma >= 0.0))
    throw DomainError("exceptional_theta2: gamma must be >= 0");
  return std::acos(std::tanh(gamma));
}

EtaMetric eta_metric(const CoinParams& coin, double gamma, double gbz_angle) {
  const double r = gbz_radius(coin.theta2, gamma);
  const Complex beta =
      r * Complex(std::cos(gbz_angle), std::sin(gbz_angle));
  const Eigen::Matrix2cd u = bloch_operator(coin, gamma, beta);

  const auto [l1, l2] = lambda_pair_from_trace(u.trace());
  if (std::abs(l1 - l2) <= 1e-8)
    throw EpProximityError("eta_metric: eigenvalue gap <= 1e-8");

  // Left eigenvector chi of U for eigenvalue l solves (U^dag - conj(l)) chi = 0;
  // for a singular 2x2 matrix A both (A01, -A00) and (A11, -A10) are null
  // vectors, so take the better conditioned of the two.
  const Eigen::Matrix2cd udag = u.adjoint();
  auto left_vector = [&](Complex l) {
    const Eigen::Matrix2cd a = udag - std::conj(l) * Eigen::Matrix2cd::Identity();
    Eigen::Vector2cd n1(a(0, 1), -a(0, 0));
    Eigen::Vector2cd n2(a(1, 1), -a(1, 0));
    Eigen::Vector2cd chi = n1.norm() >= n2.norm() ? n1 : n2;
    return (chi / chi.norm()).eval();
  };
  const Eigen::Vector2cd chi1 = left_vector(l1);
  const Eigen::Vector2cd chi2 = left_vector(l2);

  EtaMetric out;
  out.eta = chi1 * chi1.adjoint() + chi2 * chi2.adjoint();

  // det U = 1, so the inverse is the adjugate.
  Eigen::Matrix2cd uinv;
  uinv << u(1, 1), -u(0, 1), -u(1, 0), u(0, 0);
  const Eigen::Matrix2cd lhs = out.eta * uinv * out.eta.inverse();
  out.residual = (lhs - udag).cwiseAbs().maxCoeff();

  // eta is a Hermitian Gram sum, positive definite iff the chi's span C^2.
  const double det = out.eta.determinant().real();
  out.positive_definite = det > 1e-12 && out.eta.trace().real() > 0.0;
  return out;
}

}  // namespace nhqw
