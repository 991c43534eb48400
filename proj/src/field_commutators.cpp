#include "hcqft/field_commutators.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace hcqft {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Bicomplex times_i(const Bicomplex& a) { return Bicomplex::i() * a; }

void require_separation(double delta) {
  if (delta == 0.0) throw DomainError("commutator kernel diverges at zero separation");
}

void require_constant_rho(const CommutationTable& table) {
  if (table.rho_fn) throw DomainError("closed forms need momentum-independent rho");
}

Bicomplex off_origin_zero(double delta) {
  require_separation(delta);
  return {};
}

}  // namespace

double bessel_k(int order, double z) {
  if (order != 0 && order != 1) throw DomainError("bessel_k supports orders 0 and 1");
  if (!(z > 0.0)) throw DomainError("bessel_k needs z > 0");
  return std::cyl_bessel_k(static_cast<double>(order), z);
}

std::string to_string(Kernel k) {
  switch (k) {
    case Kernel::delta: return "delta";
    case Kernel::delta_second_minus_M2_delta: return "delta_second_minus_M2_delta";
    case Kernel::bessel_K1_over_dx: return "bessel_K1_over_dx";
    case Kernel::bessel_K0: return "bessel_K0";
    case Kernel::divergent: return "divergent";
  }
  return "?";
}

Bicomplex omega_bracket(const CommutationTable& table) {
  require_constant_rho(table);
  const Bicomplex& r1 = table.rho[0];
  const Bicomplex& r4 = table.rho[3];
  return Jplus() * (r1 - conj_bar(r4)) + Jminus() * (conj_bar(r1) - r4);
}

Bicomplex omega_pi_bracket(const CommutationTable& table) {
  require_constant_rho(table);
  const Bicomplex& r1 = table.rho[0];
  const Bicomplex& r4 = table.rho[3];
  return Jplus() * (r1 + conj_bar(r4)) + Jminus() * (conj_bar(r1) + r4);
}

CommutatorResult commutator_omega_omegadagger(const CommutationTable& table) {
  CommutatorResult r;
  r.coefficient = omega_bracket(table) * kTwoPi;
  r.kernel = Kernel::delta;
  r.delta_coefficient = 1.0;
  r.value_at = off_origin_zero;
  return r;
}

CommutatorResult commutator_pi_pidagger(const CommutationTable& table, const FieldParams& params) {
  CommutatorResult r;
  r.coefficient = omega_bracket(table) * kTwoPi;
  r.kernel = Kernel::delta_second_minus_M2_delta;
  r.delta_coefficient = -params.modified_mass_sq();
  r.delta_second_coefficient = 1.0;
  r.value_at = off_origin_zero;
  return r;
}

double omega_transform(double delta, double M2) {
  require_separation(delta);
  const double a = std::abs(delta);
  if (M2 > 0.0) {
    const double M = std::sqrt(M2);
    return -2.0 * M * bessel_k(1, M * a) / a;
  }
  if (M2 == 0.0) return -2.0 / (a * a);
  const double mu = std::sqrt(-M2);
  return std::numbers::pi * mu * std::cyl_neumann(1.0, mu * a) / a;
}

double inverse_omega_transform(double delta, double M2) {
  require_separation(delta);
  const double a = std::abs(delta);
  if (M2 > 0.0) return 2.0 * bessel_k(0, std::sqrt(M2) * a);
  if (M2 == 0.0) throw DomainError("1/omega transform diverges at M^2 = 0");
  return -std::numbers::pi * std::cyl_neumann(0.0, std::sqrt(-M2) * a);
}

Bicomplex commutator_omega_pi_closed(double delta_x, const FieldParams& params,
                                     const CommutationTable& table, FormVariant variant) {
  require_separation(delta_x);
  const double M2 = params.modified_mass_sq();
  if (!(M2 > 0.0)) throw DomainError("closed form needs m^2 - gamma^2/4 > 0");
  if (variant == FormVariant::printed) {
    const double k1 = bessel_k(1, M2 * std::abs(delta_x));
    return times_i(omega_bracket(table)) * (-2.0 * std::sqrt(M2) / delta_x * k1);
  }
  return times_i(omega_pi_bracket(table)) * -omega_transform(delta_x, M2);
}

Bicomplex commutator_omega_pi_quadrature(double delta_x, const FieldParams& params,
                                         const QuadratureSpec& spec, const CommutationTable& table) {
  if (params.dim != 1) throw DomainError("quadrature is implemented in one spatial dimension");
  const double F = regulated_transform(SpectralWeight::omega, delta_x, params.modified_mass_sq(), spec);
  // -i int omega [(J+ rho1 + J- conj rho1) e^{ik d} + (J+ conj rho4 + J- rho4) e^{-ik d}] dk,
  // and the transform of the even weight omega_k is the same at d and -d.
  const Bicomplex& r1 = table.rho[0];
  const Bicomplex& r4 = table.rho[3];
  const Bicomplex forward = Jplus() * r1 + Jminus() * conj_bar(r1);
  const Bicomplex backward = Jplus() * conj_bar(r4) + Jminus() * r4;
  return times_i(forward * F + backward * F) * -1.0;
}

Bicomplex commutator_omega_pi_m0_limit(double delta_x, double gamma, const CommutationTable& table,
                                       FormVariant variant) {
  require_separation(delta_x);
  if (!(gamma > 0.0)) throw DomainError("m -> 0 limit needs gamma > 0");
  if (variant == FormVariant::printed) {
    const double arg = std::pow(gamma, 4) / 16.0 * std::abs(delta_x);
    return omega_bracket(table) * (std::abs(gamma) * bessel_k(1, arg));
  }
  const double M2 = -0.25 * gamma * gamma;
  return times_i(omega_pi_bracket(table)) * -omega_transform(delta_x, M2);
}

CommutatorResult weighted_commutators(WeightedWhich which, double delta_x, const FieldParams& params,
                                      const CommutationTable& table) {
  const double M2 = params.modified_mass_sq();
  CommutatorResult r;
  switch (which) {
    case WeightedWhich::omega_omega: {
      const Bicomplex c = omega_bracket(table);
      r.coefficient = c * 2.0;
      r.kernel = Kernel::bessel_K0;
      r.value_at = [c, M2](double d) { return c * inverse_omega_transform(d, M2); };
      break;
    }
    case WeightedWhich::pi_pi: {
      const Bicomplex c = omega_bracket(table);
      r.coefficient = c * 2.0;
      r.kernel = Kernel::bessel_K1_over_dx;
      r.value_at = [c, M2](double d) { return c * -omega_transform(d, M2); };
      break;
    }
    case WeightedWhich::omega_pi: {
      r.coefficient = times_i(omega_pi_bracket(table)) * -kTwoPi;
      r.kernel = Kernel::delta;
      r.delta_coefficient = 1.0;
      r.value_at = off_origin_zero;
      break;
    }
  }
  if (delta_x == 0.0 && r.kernel != Kernel::delta) r.kernel = Kernel::divergent;
  return r;
}

Bicomplex weighted_commutator_quadrature(WeightedWhich which, double delta_x,
                                         const FieldParams& params, const CommutationTable& table,
                                         const QuadratureSpec& spec) {
  const double M2 = params.modified_mass_sq();
  const Bicomplex c = omega_bracket(table);
  switch (which) {
    case WeightedWhich::omega_omega:
      return c * regulated_transform(SpectralWeight::inverse_omega, delta_x, M2, spec);
    case WeightedWhich::pi_pi:
      return c * -regulated_transform(SpectralWeight::omega, delta_x, M2, spec);
    case WeightedWhich::omega_pi:
      break;
  }
  throw DomainError("weighted [Omega, Pi] is a delta kernel; no pointwise quadrature");
}

// ---- symbolic lattice evaluation --------------------------------------

FieldExpansion lattice_field(FieldKind kind, const FieldParams& params, const Lattice& lattice) {
  if (kind == FieldKind::omega_dagger) return adjoint(lattice_field(FieldKind::omega, params, lattice));
  if (kind == FieldKind::pi_dagger) return adjoint(lattice_field(FieldKind::pi, params, lattice));

  const auto [g1, g2] = dissipative_coefficients(params);
  const double dk = lattice.delta_k;
  const Bicomplex jp = Jplus() * dk, jm = Jminus() * dk;
  FieldExpansion f;
  for (int n : lattice.indices()) {
    const double k = lattice.momentum(n);
    const double w = omega(k, params);
    if (kind == FieldKind::omega) {
      f.push_back({jp, g1, w, -k, op(Species::a1, n)});
      f.push_back({jp, g1, -w, k, op(Species::a2, n, true)});
      f.push_back({jm, g2, w, -k, op(Species::b1, n, true)});
      f.push_back({jm, g2, -w, k, op(Species::b2, n)});
    } else {
      const Bicomplex iw{0.0, w};
      f.push_back({jp * -iw, g2, -w, k, op(Species::b1, n)});
      f.push_back({jp * iw, g2, w, -k, op(Species::b2, n, true)});
      f.push_back({jm * -iw, g1, -w, k, op(Species::a1, n, true)});
      f.push_back({jm * iw, g1, w, -k, op(Species::a2, n)});
    }
  }
  return f;
}

FieldExpansion adjoint(const FieldExpansion& field) {
  FieldExpansion out;
  out.reserve(field.size());
  for (const auto& t : field) {
    out.push_back({conj_bar(t.coefficient), t.damping, -t.frequency, -t.wave_number, dag(t.op)});
  }
  return out;
}

FieldExpansion canonical_momentum(const FieldExpansion& omega_field, const FieldParams& params) {
  FieldExpansion out;
  for (const auto& t : adjoint(omega_field)) {
    const Bicomplex d_dt{t.damping, t.frequency};
    const Bicomplex c = t.coefficient * d_dt - Bicomplex::j() * t.coefficient * (0.5 * params.gamma);
    if (!c.is_zero()) out.push_back({c, t.damping, t.frequency, t.wave_number, t.op});
  }
  return out;
}

Bicomplex LatticeKernel::at(double x, double xp) const {
  Bicomplex sum;
  for (const auto& [q, c] : terms) {
    const double phase = q.first * x + q.second * xp;
    sum += c * Bicomplex{std::cos(phase), std::sin(phase)};
  }
  return sum;
}

bool LatticeKernel::depends_only_on_separation() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const auto& kv) { return kv.first.second == -kv.first.first; });
}

bool LatticeKernel::hermitian() const {
  for (const auto& [q, c] : terms) {
    auto it = terms.find({-q.second, -q.first});
    const Bicomplex mirror = it == terms.end() ? Bicomplex{} : it->second;
    if (!(c == conj_bar(mirror))) return false;
  }
  return true;
}

LatticeKernel lattice_commutator(const FieldExpansion& a, const FieldExpansion& b, double t,
                                 const CommutationTable& table) {
  LatticeKernel kernel;
  for (const auto& x : a) {
    for (const auto& y : b) {
      const CentralValue cv = commutator_parts(x.op, y.op, table);
      if (cv.is_zero()) continue;
      Bicomplex c = x.coefficient * y.coefficient * cv.coefficient * cv.delta;
      const double damping = x.damping + y.damping;
      const double frequency = x.frequency + y.frequency;
      if (damping != 0.0 || frequency != 0.0) {
        c = c * Bicomplex{std::cos(frequency * t), std::sin(frequency * t)} * std::exp(damping * t);
      }
      if (c.is_zero()) continue;
      auto [it, fresh] = kernel.terms.try_emplace({x.wave_number, y.wave_number}, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) kernel.terms.erase(it);
      }
    }
  }
  return kernel;
}

DeltaStructure delta_structure(const LatticeKernel& kernel, const Lattice& lattice) {
  if (!kernel.depends_only_on_separation()) {
    throw DomainError("kernel depends on more than the separation x' - x");
  }
  std::vector<double> ks;
  std::vector<Bicomplex> ws;
  for (int n : lattice.indices()) {
    const double k = lattice.momentum(n);
    auto it = kernel.terms.find({-k, k});
    ks.push_back(k);
    ws.push_back(it == kernel.terms.end() ? Bicomplex{} : it->second * (1.0 / lattice.delta_k));
  }
  // Least squares for w = c0 + c2 k^2, one real component at a time.
  double s0 = 0, s2 = 0, s4 = 0;
  for (double k : ks) {
    s0 += 1;
    s2 += k * k;
    s4 += k * k * k * k;
  }
  const double det = s0 * s4 - s2 * s2;
  auto fit = [&](auto get) {
    double b0 = 0, b2 = 0;
    for (std::size_t i = 0; i < ks.size(); ++i) {
      b0 += get(ws[i]);
      b2 += get(ws[i]) * ks[i] * ks[i];
    }
    return std::pair{(s4 * b0 - s2 * b2) / det, (s0 * b2 - s2 * b0) / det};
  };
  const auto [x0, x2] = fit([](const Bicomplex& w) { return w.x; });
  const auto [y0, y2] = fit([](const Bicomplex& w) { return w.y; });
  const auto [u0, u2] = fit([](const Bicomplex& w) { return w.u; });
  const auto [v0, v2] = fit([](const Bicomplex& w) { return w.v; });
  DeltaStructure s{{x0, y0, u0, v0}, {x2, y2, u2, v2}, 0.0};
  double scale = 0.0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const Bicomplex model = s.c0 + s.c2 * (ks[i] * ks[i]);
    s.fit_residual = std::max(s.fit_residual, magnitude(ws[i] - model));
    scale = std::max(scale, magnitude(ws[i]));
  }
  if (s.fit_residual > 1e-9 * std::max(scale, 1e-300)) {
    throw DomainError("kernel weights are not a delta / delta'' combination");
  }
  return s;
}

// ---- figure sweeps ---------------------------------------------------------

Bicomplex commutator_value(CommutatorWhich which, double delta, double M2,
                           const CommutationTable& table) {
  switch (which) {
    case CommutatorWhich::omega_omega:
    case CommutatorWhich::pi_pi:
    case CommutatorWhich::w_omega_pi:
      return off_origin_zero(delta);
    case CommutatorWhich::omega_pi:
      return times_i(omega_pi_bracket(table)) * -omega_transform(delta, M2);
    case CommutatorWhich::w_omega_omega:
      return omega_bracket(table) * inverse_omega_transform(delta, M2);
    case CommutatorWhich::w_pi_pi:
      return omega_bracket(table) * -omega_transform(delta, M2);
  }
  return {};
}

std::vector<FigureRow> commutator_sweep(CommutatorWhich which, SweepAxis axis, const Grid& grid,
                                        const FieldParams& params, const CommutationTable& table) {
  if (grid.steps < 1) throw DomainError("sweep needs at least one point");
  const double lo = std::min(grid.min, grid.max), hi = std::max(grid.min, grid.max);
  std::vector<FigureRow> rows;
  rows.reserve(grid.steps);
  for (int i = 0; i < grid.steps; ++i) {
    const double x = grid.steps == 1 ? lo : lo + (hi - lo) * i / (grid.steps - 1);
    double delta = x, M2 = params.modified_mass_sq();
    if (axis == SweepAxis::mass) {
      delta = grid.fixed_delta;
      M2 = std::copysign(x * x, x);
    }
    const Bicomplex v = commutator_value(which, delta, M2, table);
    rows.push_back({x, v.x, v.y});
  }
  return rows;
}

std::vector<FigureRow> figure_data(Figure figure, const Grid& grid, const FieldParams& params,
                                   const CommutationTable& table) {
  switch (figure) {
    case Figure::fig1:
      return commutator_sweep(CommutatorWhich::omega_pi, SweepAxis::delta, grid, params, table);
    case Figure::fig2:
      return commutator_sweep(CommutatorWhich::omega_pi, SweepAxis::mass, grid, params, table);
    case Figure::fig6a:
      return commutator_sweep(CommutatorWhich::w_omega_omega, SweepAxis::delta, grid, params, table);
    case Figure::fig6b:
      if (std::min(grid.min, grid.max) <= 0.0) {
        throw DomainError("weighted [Omega, Omega^+] mass sweep needs m_mod > 0");
      }
      return commutator_sweep(CommutatorWhich::w_omega_omega, SweepAxis::mass, grid, params, table);
    case Figure::fig7a:
      return commutator_sweep(CommutatorWhich::w_pi_pi, SweepAxis::delta, grid, params, table);
    case Figure::fig7b:
      return commutator_sweep(CommutatorWhich::w_pi_pi, SweepAxis::mass, grid, params, table);
  }
  return {};
}

std::string figure_csv(const std::vector<FigureRow>& rows) {
  std::ostringstream out;
  out << "x,re,im\n" << std::fixed << std::setprecision(15);
  for (const auto& r : rows) out << r.x << ',' << r.re << ',' << r.im << '\n';
  return out.str();
}

}  // namespace hcqft
