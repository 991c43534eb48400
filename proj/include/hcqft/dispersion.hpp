#pragma once

#include <span>
#include <utility>
#include <vector>

#include "hcqft/bicomplex.hpp"

namespace hcqft {

/// Mass, dissipation and spatial dimension of the doubled field.
struct FieldParams {
  double m = 1.0;
  double gamma = 0.0;
  int dim = 1;

  /// Modified mass squared M^2 = m^2 - gamma^2 / 4.
  [[nodiscard]] double modified_mass_sq() const { return m * m - 0.25 * gamma * gamma; }
};

enum class Branch { plus, minus };

/// One damped plane wave in the J+ (system) or J- (environment) sector:
///   J^{branch} e^{Gamma t} [coeff_a e^{i(omega t - k.x)} + coeff_b e^{-i(omega t - k.x)}].
/// For the plus branch coeff_a, coeff_b play the roles of a1 and conj(a2);
/// for the minus branch they are conj(b1) and b2.
struct ModeSolution {
  Branch branch = Branch::plus;
  Bicomplex coeff_a{1.0};
  Bicomplex coeff_b{};
  std::vector<double> k{0.0};
  double omega = 0.0;
  double Gamma = 0.0;
};

struct DissipativeCoefficients {
  double Gamma1;
  double Gamma2;
};

DissipativeCoefficients dissipative_coefficients(const FieldParams& params);

/// Positive root sqrt(k^2 + M^2); throws ImaginaryFrequency below the IR cutoff.
double omega(std::span<const double> k, const FieldParams& params);
double omega(double k, const FieldParams& params);

/// Builds a mode with Gamma and omega fixed by the equations of motion.
ModeSolution make_mode(Branch branch, std::vector<double> k, const FieldParams& params,
                       Bicomplex coeff_a = Bicomplex{1.0}, Bicomplex coeff_b = Bicomplex{});

/// Analytic d^2/dt^2 - lap +/- gamma d/dt + m^2 applied to the mode at (x, t).
Bicomplex eom_residual(const ModeSolution& mode, const FieldParams& params,
                       std::span<const double> x, double t);

/// Scale against which eom_residual is judged: |amplitude| e^{Gamma t} times
/// the size of the individual operator terms.
double eom_scale(const ModeSolution& mode, const FieldParams& params, double t);

Bicomplex field_value(std::span<const ModeSolution> modes, std::span<const double> x, double t);
Bicomplex field_dt(std::span<const ModeSolution> modes, std::span<const double> x, double t);
/// Derivative along spatial axis `axis`.
Bicomplex field_dx(std::span<const ModeSolution> modes, std::span<const double> x, double t,
                   int axis = 0);

}  // namespace hcqft
