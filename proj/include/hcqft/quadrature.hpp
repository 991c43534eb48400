#pragma once

namespace hcqft {

/// Controls the Gaussian-regulated evaluation of int f(k) e^{ik delta} dk.
struct QuadratureSpec {
  double regulator_epsilon = 0.0;  // first epsilon; 0 picks delta^2 / 400
  double k_max = 0.0;              // 0 picks sqrt(40 / epsilon) for each epsilon
  int samples = 40;                // Gauss-Legendre nodes per oscillation period
  int extrapolation_steps = 5;     // epsilon halvings after the first
  double tolerance = 1e-9;         // Cauchy test on the Richardson diagonal
};

enum class SpectralWeight { omega, inverse_omega };

/// int f(k) e^{ik delta} e^{-eps k^2} dk over the admissible momenta
/// (|k| >= sqrt(-M2) when M2 < 0), extrapolated to eps -> 0 by Richardson
/// on the halving sequence. f is omega_k or 1 / omega_k; both are even, so
/// the transform is real. Throws NonConvergent when the diagonal fails the
/// Cauchy test.
double regulated_transform(SpectralWeight weight, double delta, double M2,
                           const QuadratureSpec& spec = {});

/// Single regulated integral at fixed epsilon, no extrapolation.
double regulated_integral(SpectralWeight weight, double delta, double M2, double epsilon,
                          const QuadratureSpec& spec = {});

}  // namespace hcqft
