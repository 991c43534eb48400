#include "hcqft/dispersion.hpp"

#include <cmath>
#include <sstream>

namespace hcqft {
namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

Bicomplex projector(Branch b) { return b == Branch::plus ? Jplus() : Jminus(); }

double dissipation_sign(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

// Characteristic polynomial of the sector equation, s^2 + k^2 +/- gamma s + m^2.
Complex characteristic(const Complex& s, double k2, const FieldParams& p, Branch b) {
  return s * s + k2 + dissipation_sign(b) * p.gamma * s + p.m * p.m;
}

Bicomplex phase(double theta) { return {std::cos(theta), std::sin(theta), 0.0, 0.0}; }

double theta(const ModeSolution& mode, std::span<const double> x, double t) {
  return mode.omega * t - dot(mode.k, x);
}

}  // namespace

DissipativeCoefficients dissipative_coefficients(const FieldParams& params) {
  return {-0.5 * params.gamma, 0.5 * params.gamma};
}

double omega(std::span<const double> k, const FieldParams& params) {
  const double radicand = dot(k, k) + params.modified_mass_sq();
  if (radicand < 0.0) {
    std::ostringstream msg;
    msg << "k^2 + M^2 = " << radicand << " < 0 (below the infrared cutoff)";
    throw ImaginaryFrequency(msg.str());
  }
  return std::sqrt(radicand);
}

double omega(double k, const FieldParams& params) {
  return omega(std::span<const double>(&k, 1), params);
}

ModeSolution make_mode(Branch branch, std::vector<double> k, const FieldParams& params,
                       Bicomplex coeff_a, Bicomplex coeff_b) {
  const auto [g1, g2] = dissipative_coefficients(params);
  ModeSolution mode;
  mode.branch = branch;
  mode.coeff_a = coeff_a;
  mode.coeff_b = coeff_b;
  mode.omega = omega(k, params);
  mode.k = std::move(k);
  mode.Gamma = branch == Branch::plus ? g1 : g2;
  return mode;
}

Bicomplex eom_residual(const ModeSolution& mode, const FieldParams& params,
                       std::span<const double> x, double t) {
  const double k2 = dot(mode.k, mode.k);
  const Complex p_fwd = characteristic({mode.Gamma, mode.omega}, k2, params, mode.branch);
  const Complex p_bwd = characteristic({mode.Gamma, -mode.omega}, k2, params, mode.branch);
  const double th = theta(mode, x, t);
  const Bicomplex bracket = mode.coeff_a * from_complex(p_fwd) * phase(th) +
                            mode.coeff_b * from_complex(p_bwd) * phase(-th);
  return projector(mode.branch) * bracket * std::exp(mode.Gamma * t);
}

double eom_scale(const ModeSolution& mode, const FieldParams& params, double t) {
  const double k2 = dot(mode.k, mode.k);
  const double terms = mode.Gamma * mode.Gamma + mode.omega * mode.omega + k2 +
                       params.gamma * std::hypot(mode.Gamma, mode.omega) + params.m * params.m;
  const double amplitude = magnitude(mode.coeff_a) + magnitude(mode.coeff_b);
  return terms * amplitude * std::exp(mode.Gamma * t);
}

Bicomplex field_value(std::span<const ModeSolution> modes, std::span<const double> x, double t) {
  Bicomplex sum;
  for (const auto& mode : modes) {
    const double th = theta(mode, x, t);
    sum += projector(mode.branch) * (mode.coeff_a * phase(th) + mode.coeff_b * phase(-th)) *
           std::exp(mode.Gamma * t);
  }
  return sum;
}

Bicomplex field_dt(std::span<const ModeSolution> modes, std::span<const double> x, double t) {
  Bicomplex sum;
  for (const auto& mode : modes) {
    const double th = theta(mode, x, t);
    const Bicomplex fwd = from_complex({mode.Gamma, mode.omega});
    const Bicomplex bwd = from_complex({mode.Gamma, -mode.omega});
    sum += projector(mode.branch) * (mode.coeff_a * fwd * phase(th) + mode.coeff_b * bwd * phase(-th)) *
           std::exp(mode.Gamma * t);
  }
  return sum;
}

Bicomplex field_dx(std::span<const ModeSolution> modes, std::span<const double> x, double t,
                   int axis) {
  Bicomplex sum;
  for (const auto& mode : modes) {
    const double ka = static_cast<std::size_t>(axis) < mode.k.size() ? mode.k[axis] : 0.0;
    const double th = theta(mode, x, t);
    const Bicomplex fwd = from_complex({0.0, -ka});
    const Bicomplex bwd = from_complex({0.0, ka});
    sum += projector(mode.branch) * (mode.coeff_a * fwd * phase(th) + mode.coeff_b * bwd * phase(-th)) *
           std::exp(mode.Gamma * t);
  }
  return sum;
}

}  // namespace hcqft
