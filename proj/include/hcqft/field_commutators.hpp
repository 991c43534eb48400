#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hcqft/bicomplex.hpp"
#include "hcqft/dispersion.hpp"
#include "hcqft/operator_algebra.hpp"
#include "hcqft/quadrature.hpp"

namespace hcqft {

/// Modified Bessel function of the second kind, orders 0 and 1.
double bessel_k(int order, double z);

enum class Kernel { delta, delta_second_minus_M2_delta, bessel_K1_over_dx, bessel_K0, divergent };

std::string to_string(Kernel k);

struct CommutatorResult {
  Bicomplex coefficient;  // ring factor in front of the kernel
  Kernel kernel = Kernel::delta;
  // For distributional kernels: coefficient * (c2 delta'' + c0 delta).
  double delta_coefficient = 0.0;
  double delta_second_coefficient = 0.0;
  // Pointwise value at separation x' - x; zero off the origin for delta kernels.
  std::function<Bicomplex(double)> value_at;
};

/// J+(rho1 - conj rho4) + J-(conj rho1 - rho4).
Bicomplex omega_bracket(const CommutationTable& table);
/// J+(rho1 + conj rho4) + J-(conj rho1 + rho4), the ring factor of [Omega, Pi].
Bicomplex omega_pi_bracket(const CommutationTable& table);

CommutatorResult commutator_omega_omegadagger(const CommutationTable& table);
CommutatorResult commutator_pi_pidagger(const CommutationTable& table, const FieldParams& params);

/// int omega_k e^{ik delta} dk for delta != 0, any sign of M2:
/// -2 M K1(M|delta|)/|delta|, -2/delta^2, or pi mu Y1(mu|delta|)/|delta| with the
/// infrared cutoff |k| >= mu = sqrt(-M2).
double omega_transform(double delta, double M2);
/// int e^{ik delta} / omega_k dk: 2 K0(M|delta|) or -pi Y0(mu|delta|).
double inverse_omega_transform(double delta, double M2);

enum class FormVariant { derived, printed };

/// 2i B (M/|delta|) K1(M|delta|) with B = omega_pi_bracket. The printed
/// variant evaluates -2i C (M/delta) K1(M^2 |delta|) instead.
Bicomplex commutator_omega_pi_closed(double delta_x, const FieldParams& params,
                                     const CommutationTable& table,
                                     FormVariant variant = FormVariant::derived);

Bicomplex commutator_omega_pi_quadrature(double delta_x, const FieldParams& params,
                                         const QuadratureSpec& spec, const CommutationTable& table);

/// m = 0: M^2 = -gamma^2/4, so the transform is the cutoff Y1 form with
/// mu = gamma/2. The printed variant is C |gamma| K1(gamma^4/16 |delta|).
Bicomplex commutator_omega_pi_m0_limit(double delta_x, double gamma, const CommutationTable& table,
                                       FormVariant variant = FormVariant::derived);

enum class WeightedWhich { omega_omega, pi_pi, omega_pi };

/// Commutators with the 1/sqrt(omega_k) mode weight.
CommutatorResult weighted_commutators(WeightedWhich which, double delta_x, const FieldParams& params,
                                      const CommutationTable& table);
/// Same integrals through the regulated quadrature (omega_omega and pi_pi only).
Bicomplex weighted_commutator_quadrature(WeightedWhich which, double delta_x,
                                         const FieldParams& params, const CommutationTable& table,
                                         const QuadratureSpec& spec = {});

// ---- symbolic lattice evaluation --------------------------------------

/// One term coefficient * e^{damping t} e^{i frequency t} e^{i wave_number x} op.
struct FieldTerm {
  Bicomplex coefficient;
  double damping = 0.0;
  double frequency = 0.0;
  double wave_number = 0.0;
  ModeOp op;
};

using FieldExpansion = std::vector<FieldTerm>;

enum class FieldKind { omega, omega_dagger, pi, pi_dagger };

FieldExpansion lattice_field(FieldKind kind, const FieldParams& params, const Lattice& lattice);
FieldExpansion adjoint(const FieldExpansion& field);
/// conj(Omega)' - j (gamma/2) conj(Omega), term by term.
FieldExpansion canonical_momentum(const FieldExpansion& omega, const FieldParams& params);

/// sum over (q, q') of c e^{i(q x + q' x')}.
struct LatticeKernel {
  std::map<std::pair<double, double>, Bicomplex> terms;

  [[nodiscard]] Bicomplex at(double x, double xp) const;
  [[nodiscard]] bool depends_only_on_separation() const;
  /// C(x, x') = conj_bar(C(x', x)) for every term, exactly.
  [[nodiscard]] bool hermitian() const;
  friend bool operator==(const LatticeKernel& a, const LatticeKernel& b) { return a.terms == b.terms; }
};

/// [A(x, t), B(x', t)] with the exponents of each product added before
/// they are evaluated.
LatticeKernel lattice_commutator(const FieldExpansion& a, const FieldExpansion& b, double t,
                                 const CommutationTable& table);

/// Reads a separation-only kernel sum_k w(k) e^{ik(x'-x)} as
/// 2 pi (c0 delta - c2 delta''), fitting w(k) / dk = c0 + c2 k^2.
/// Throws DomainError when the weights are not of that form.
struct DeltaStructure {
  Bicomplex c0;
  Bicomplex c2;
  double fit_residual = 0.0;
};
DeltaStructure delta_structure(const LatticeKernel& kernel, const Lattice& lattice);

// ---- figure sweeps ---------------------------------------------------------

enum class Figure { fig1, fig2, fig6a, fig6b, fig7a, fig7b };
enum class SweepAxis { delta, mass };

struct Grid {
  double min = 0.1;
  double max = 5.0;
  int steps = 50;
  double fixed_delta = 1.0;  // separation held fixed for mass sweeps
};

struct FigureRow {
  double x;
  double re;  // 1-part
  double im;  // i-part
};

enum class CommutatorWhich { omega_omega, pi_pi, omega_pi, w_omega_omega, w_pi_pi, w_omega_pi };

/// Pointwise value of a commutator at separation delta; M2 replaces the
/// field's modified mass squared (mass sweeps use the signed m_mod).
Bicomplex commutator_value(CommutatorWhich which, double delta, double M2,
                           const CommutationTable& table);

std::vector<FigureRow> commutator_sweep(CommutatorWhich which, SweepAxis axis, const Grid& grid,
                                        const FieldParams& params, const CommutationTable& table);
std::vector<FigureRow> figure_data(Figure figure, const Grid& grid, const FieldParams& params,
                                   const CommutationTable& table);
std::string figure_csv(const std::vector<FigureRow>& rows);

}  // namespace hcqft
