#pragma once

#include <span>

#include "hcqft/bicomplex.hpp"
#include "hcqft/dispersion.hpp"
#include "hcqft/operator_algebra.hpp"

namespace hcqft {

enum class GeometryKind { infinite_line, finite_interval };

struct GeometrySpec {
  GeometryKind kind = GeometryKind::infinite_line;
  double L1 = 0.0;
  double L2 = 0.0;

  /// Throws DomainError for a finite interval with L2 <= L1.
  void validate() const;
  [[nodiscard]] double length() const { return L2 - L1; }
};

/// 2 w_k' w_k + k' k / 2 + (i gamma / 2)(w_k' + w_k) + M^2 / 2.
Complex h_gamma(double k, double kprime, const FieldParams& params);

/// I(q) = int e^{-iqx} dx over the system. The infinite line realises
/// 2 pi delta(q) on a lattice of spacing delta_k.
Complex geometry_kernel(double q, const GeometrySpec& geom, double delta_k = 0.1);

/// Double momentum sum dk^2 H_gamma G [J+{a1(k), b1(k')} + J-{b2(k'), a2(k)}]
/// plus its literal adjoint, with G = e^{i(w_k - w_k')t} I(k - k'). On the
/// infinite line only k = k' survives.
OperatorPoly hamiltonian_poly(const FieldParams& params, const GeometrySpec& geom,
                              const CommutationTable& table, double t = 0.0);

/// -2i dk sum_k w_k [J+{a1,b1} + J-{a1+,b1+} - (J+{b2+,a2+} + J-{b2,a2})].
OperatorPoly charge_poly(const FieldParams& params, const CommutationTable& table);

struct RealComponents {
  double phi1 = 0, phi2 = 0, psi1 = 0, psi2 = 0;
  double dphi1 = 0, dphi2 = 0, dpsi1 = 0, dpsi2 = 0;
};

/// i(phi2' phi1 - phi1' phi2 + psi1' psi2 - psi2' psi1)
///   + j(psi1' phi1 + psi2' phi2 - phi1' psi1 - phi2' psi2).
Bicomplex charge_density_classical(const RealComponents& f);

/// d_t j0 + d_x j^x with j0 = conj(W) W' - W conj(W)' + j gamma W conj(W)
/// and j^x = -(conj(W) d_x W - W d_x conj(W)), outer derivatives by central
/// differences of step h. Vanishes to O(h^2) on shell.
Bicomplex noether_residual(std::span<const ModeSolution> modes, const FieldParams& params, double x,
                           double t, double h = 1e-3);
/// Size of the individual terms in the residual, for relative tolerances.
double noether_scale(std::span<const ModeSolution> modes, const FieldParams& params, double x,
                     double t);

Bicomplex vev_H(const FieldParams& params, const GeometrySpec& geom, const CommutationTable& table,
                const VacuumRules& rules);
Bicomplex vev_Q(const FieldParams& params, const CommutationTable& table, const VacuumRules& rules);

}  // namespace hcqft
