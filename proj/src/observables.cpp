#include "hcqft/observables.hpp"

#include <cmath>
#include <numbers>

#include "hcqft/errors.hpp"

namespace hcqft {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

OperatorPoly scaled(const OperatorPoly& p, const Bicomplex& c) { return p * c; }

// J+ {a1(n), b1(np)} + J- {b2(np), a2(n)} weighted by c.
OperatorPoly pair_block(int n, int np, const Complex& c) {
  const Bicomplex w = from_complex(c);
  return scaled(anticommutator(op(Species::a1, n), op(Species::b1, np)), Jplus() * w) +
         scaled(anticommutator(op(Species::b2, np), op(Species::a2, n)), Jminus() * w);
}

struct Fields {
  Bicomplex w, wt, wx;
};

Fields fields_at(std::span<const ModeSolution> modes, double x, double t) {
  const double xs[1] = {x};
  return {field_value(modes, xs, t), field_dt(modes, xs, t), field_dx(modes, xs, t)};
}

Bicomplex j0(std::span<const ModeSolution> modes, const FieldParams& params, double x, double t) {
  const auto f = fields_at(modes, x, t);
  const Bicomplex wb = conj_bar(f.w);
  return wb * f.wt - f.w * conj_bar(f.wt) + Bicomplex::j() * f.w * wb * params.gamma;
}

Bicomplex jx(std::span<const ModeSolution> modes, double x, double t) {
  const auto f = fields_at(modes, x, t);
  return -(conj_bar(f.w) * f.wx - f.w * conj_bar(f.wx));
}

}  // namespace

void GeometrySpec::validate() const {
  if (kind == GeometryKind::finite_interval && !(L2 > L1)) {
    throw DomainError("finite interval needs L2 > L1");
  }
}

Complex h_gamma(double k, double kprime, const FieldParams& params) {
  const double w = omega(k, params), wp = omega(kprime, params);
  return {2.0 * wp * w + 0.5 * kprime * k + 0.5 * params.modified_mass_sq(),
          0.5 * params.gamma * (wp + w)};
}

Complex geometry_kernel(double q, const GeometrySpec& geom, double delta_k) {
  geom.validate();
  if (geom.kind == GeometryKind::infinite_line) {
    return q == 0.0 ? Complex(kTwoPi / delta_k) : Complex(0.0);
  }
  const double L = geom.length();
  if (q == 0.0) return L;
  // e^{-iqL1} (1 - e^{-iqL}) / (iq), with 1 - e^{-iz} = 2 sin^2(z/2) + i sin z.
  const double z = q * L, s = std::sin(0.5 * z);
  const Complex one_minus(2.0 * s * s, std::sin(z));
  return std::polar(1.0, -q * geom.L1) * one_minus / Complex(0.0, q);
}

OperatorPoly hamiltonian_poly(const FieldParams& params, const GeometrySpec& geom,
                              const CommutationTable& table, double t) {
  geom.validate();
  const Lattice& lat = table.lattice;
  const double dk = lat.delta_k;
  OperatorPoly h;
  if (geom.kind == GeometryKind::infinite_line) {
    for (int n : lat.indices()) {
      const double k = lat.momentum(n);
      h += pair_block(n, n, kTwoPi * dk * h_gamma(k, k, params));
    }
  } else {
    for (int n : lat.indices()) {
      const double k = lat.momentum(n);
      const double w = omega(k, params);
      for (int np : lat.indices()) {
        const double kp = lat.momentum(np);
        const Complex G = std::polar(1.0, (w - omega(kp, params)) * t) * geometry_kernel(k - kp, geom, dk);
        h += pair_block(n, np, dk * dk * h_gamma(k, kp, params) * G);
      }
    }
  }
  return h + adjoint(h);
}

OperatorPoly charge_poly(const FieldParams& params, const CommutationTable& table) {
  const Lattice& lat = table.lattice;
  OperatorPoly q;
  for (int n : lat.indices()) {
    const Bicomplex c{0.0, -2.0 * lat.delta_k * omega(lat.momentum(n), params)};
    const auto a1 = op(Species::a1, n), b1 = op(Species::b1, n);
    const auto a2 = op(Species::a2, n), b2 = op(Species::b2, n);
    q += scaled(anticommutator(a1, b1), Jplus() * c);
    q += scaled(anticommutator(dag(a1), dag(b1)), Jminus() * c);
    q -= scaled(anticommutator(dag(b2), dag(a2)), Jplus() * c);
    q -= scaled(anticommutator(b2, a2), Jminus() * c);
  }
  return q;
}

Bicomplex charge_density_classical(const RealComponents& f) {
  return {0.0, f.dphi2 * f.phi1 - f.dphi1 * f.phi2 + f.dpsi1 * f.psi2 - f.dpsi2 * f.psi1,
          f.dpsi1 * f.phi1 + f.dpsi2 * f.phi2 - f.dphi1 * f.psi1 - f.dphi2 * f.psi2, 0.0};
}

Bicomplex noether_residual(std::span<const ModeSolution> modes, const FieldParams& params, double x,
                           double t, double h) {
  if (!(h > 0.0)) throw DomainError("finite-difference step must be positive");
  const Bicomplex dt = (j0(modes, params, x, t + h) - j0(modes, params, x, t - h)) * (0.5 / h);
  const Bicomplex dx = (jx(modes, x + h, t) - jx(modes, x - h, t)) * (0.5 / h);
  return dt + dx;
}

double noether_scale(std::span<const ModeSolution> modes, const FieldParams& params, double x,
                     double t) {
  const auto f = fields_at(modes, x, t);
  double op = 0.0;
  for (const auto& m : modes) op += eom_scale(m, params, t);
  return (magnitude(f.w) + magnitude(f.wt) + magnitude(f.wx)) * op;
}

Bicomplex vev_H(const FieldParams& params, const GeometrySpec& geom, const CommutationTable& table,
                const VacuumRules& rules) {
  return vev(hamiltonian_poly(params, geom, table), rules, table);
}

Bicomplex vev_Q(const FieldParams& params, const CommutationTable& table, const VacuumRules& rules) {
  return vev(charge_poly(params, table), rules, table);
}

}  // namespace hcqft
