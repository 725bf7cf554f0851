#pragma once

#include <Eigen/Dense>
#include <complex>
#include <utility>
#include <vector>

#include "nhqw/model.hpp"

namespace nhqw {

/// Complex quasienergy E of the one-step operator, with the logarithm branch
/// fixed as Re E in (-pi, pi] and Im E = ln|lambda|, where lambda = e^{-iE}.
struct QuasiEnergy {
  Complex value;

  double real() const { return value.real(); }
  double imag() const { return value.imag(); }
  Complex lambda() const { return std::exp(Complex(0.0, -1.0) * value); }
};

/// Branch-fixed quasienergy of a one-step eigenvalue. Throws DomainError for
/// lambda = 0.
QuasiEnergy quasienergy_from_lambda(Complex lambda);

/// Analytic continuation U(beta) of the 2x2 Bloch operator: the seven-factor
/// product with e^{ik/2} replaced by the principal square root of beta,
/// placed symmetrically. det U(beta) = 1 for every beta != 0.
Eigen::Matrix2cd bloch_operator(const CoinParams& coin, double gamma,
                                Complex beta);

/// Radius of the generalized Brillouin zone,
/// sqrt(|cosh g cos th2 - sinh g| / |cosh g cos th2 + sinh g|).
/// Throws SingularityError when the denominator vanishes.
double gbz_radius(double theta2, double gamma);

/// The two roots of the quadratic dispersion equation in beta at fixed
/// one-step eigenvalue lambda, ordered by |beta1| <= |beta2|.
/// Throws DegenerateDispersionError when cos(theta1) = 0 (the quadratic
/// loses its beta^2 and beta^0 terms) and DomainError for lambda = 0.
std::pair<Complex, Complex> beta_roots(const CoinParams& coin, double gamma,
                                       Complex lambda);

/// Both quasienergy branches of U(beta) sampled on the GBZ circle
/// beta = r e^{ip}, p uniform on [0, 2pi). Returns 2*num_points entries,
/// interleaved per angle. The degenerate case cos(theta1) = 0 has a flat
/// dispersion lambda + 1/lambda = -2 cosh(g) sin(th1) sin(th2); its two
/// branches are emitted at every angle.
std::vector<QuasiEnergy> nonbloch_spectrum(const CoinParams& coin, double gamma,
                                           int num_points = 256);

/// Quasienergies over the standard Brillouin zone beta = e^{ik}, k uniform
/// on [0, 2pi). Returns 2*num_k entries, interleaved per angle.
std::vector<QuasiEnergy> bloch_spectrum(const CoinParams& coin, double gamma,
                                        int num_k = 256);

/// Tr[U^{-1}(beta) - U^dagger(beta)] at beta = gbz_radius * e^{ip}, from the
/// closed form 2i cos(th1) sin(p) [ (sinh g - cosh g cos th2)/r
/// + r (sinh g + cosh g cos th2) ]. Vanishes exactly on the GBZ when
/// |cos th2| > |tanh g|.
Complex trace_deviation(const CoinParams& coin, double gamma, double gbz_angle);

struct PtClassification {
  enum class Phase { Exact, Broken, Boundary };
  Phase phase;
  double margin;  // |cos theta2| - |tanh gamma|
};

/// Classify the PT phase by the sign of |cos theta2| - |tanh gamma|
/// (tolerance 1e-9 on the margin; Boundary is reported, never rounded).
PtClassification pt_classify(const CoinParams& coin, double gamma);

/// Exceptional-point angle theta2* = arccos(tanh gamma) in (0, pi/2]
/// (radians). EPs sit at +-theta2* and +-(pi - theta2*).
double exceptional_theta2(double gamma);

struct EtaMetric {
  Eigen::Matrix2cd eta;    // sum_n |chi_n><chi_n| over unit-norm left states
  double residual;         // max-norm of eta U^{-1} eta^{-1} - U^dagger
  bool positive_definite;
};

/// The candidate pseudo-unitarity metric at beta = gbz_radius * e^{ip},
/// built from the unit-norm left eigenvectors of U(beta), with the residual
/// of the pseudo-unitarity relation as a diagnostic. Throws EpProximityError
/// when the eigenvalue gap is <= 1e-8.
EtaMetric eta_metric(const CoinParams& coin, double gamma, double gbz_angle);

}  // namespace nhqw
