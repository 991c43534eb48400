#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "hcqft/errors.hpp"
#include "hcqft/field_commutators.hpp"
#include "oracles.hpp"

using namespace hcqft;
using hcqft::testing::distance;
using hcqft::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

CommutationTable table_on(const Lattice& lattice) {
  CommutationTable t;
  t.lattice = lattice;
  return t;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(BesselK, MatchesIntegralRepresentation) {
  Gen g(11);
  for (int s = 0; s < 40; ++s) {
    const double z = g.uniform(0.05, 20.0);
    for (int nu : {0, 1}) {
      EXPECT_LT(rel(bessel_k(nu, z), hcqft::testing::bessel_k_integral(nu, z)), 1e-12) << nu << " " << z;
    }
  }
}

TEST(BesselK, RejectsBadArguments) {
  EXPECT_THROW(bessel_k(0, 0.0), DomainError);
  EXPECT_THROW(bessel_k(1, -1.0), DomainError);
  EXPECT_THROW(bessel_k(2, 1.0), DomainError);
}

TEST(Brackets, DefaultTableGivesUnit) {
  const CommutationTable t;
  EXPECT_EQ(omega_bracket(t), Bicomplex::one());
  EXPECT_EQ(omega_pi_bracket(t), Bicomplex::one());
}

TEST(Brackets, DifferWhenRhoFourIsSet) {
  CommutationTable t;
  t.rho[3] = {0.0, 0.5};
  EXPECT_GT(distance(omega_bracket(t), omega_pi_bracket(t)), 0.5);
}

TEST(DeltaKernels, OmegaOmegaDaggerAndPiPiDagger) {
  const FieldParams p{1.0, 0.5};
  const CommutationTable t;
  const auto oo = commutator_omega_omegadagger(t);
  EXPECT_EQ(oo.kernel, Kernel::delta);
  EXPECT_LT(distance(oo.coefficient, Bicomplex::one() * (2 * kPi)), 1e-15);
  EXPECT_EQ(oo.value_at(0.3), Bicomplex{});
  EXPECT_THROW(oo.value_at(0.0), DomainError);

  const auto pp = commutator_pi_pidagger(t, p);
  EXPECT_EQ(pp.kernel, Kernel::delta_second_minus_M2_delta);
  EXPECT_DOUBLE_EQ(pp.delta_coefficient, -p.modified_mass_sq());
  EXPECT_DOUBLE_EQ(pp.delta_second_coefficient, 1.0);
}

TEST(OmegaPi, ClosedFormMatchesQuadrature) {
  Gen g(5);
  const CommutationTable t;
  for (int s = 0; s < 20; ++s) {
    const double m = g.uniform(0.6, 2.0);
    const double gamma = g.uniform(0.0, m);  // M^2 = m^2 - gamma^2/4 > 0
    const FieldParams p{m, gamma};
    const double M = std::sqrt(p.modified_mass_sq());
    const double delta = (g.coin() ? 1 : -1) * g.uniform(0.5, 5.0) / M;
    const Bicomplex closed = commutator_omega_pi_closed(delta, p, t);
    const Bicomplex quad = commutator_omega_pi_quadrature(delta, p, {}, t);
    EXPECT_LE(distance(closed, quad), 1e-6 * magnitude(closed)) << "m=" << m << " g=" << gamma << " d=" << delta;
  }
}

TEST(OmegaPi, ClosedFormAgainstBesselOracle) {
  const FieldParams p{1.0, 0.5};
  const double M = std::sqrt(p.modified_mass_sq());
  for (double d : {0.25, 1.0, 3.0}) {
    const double k1 = hcqft::testing::bessel_k_integral(1, M * d);
    const Bicomplex expected{0.0, 2.0 * M / d * k1};
    EXPECT_LT(distance(commutator_omega_pi_closed(d, p, CommutationTable{}), expected), 1e-12);
  }
}

TEST(OmegaPi, DerivedFormIsEvenPrintedFormIsOdd) {
  const FieldParams p{1.2, 0.4};
  const CommutationTable t;
  for (double d : {0.3, 1.1, 2.7}) {
    EXPECT_EQ(commutator_omega_pi_closed(d, p, t), commutator_omega_pi_closed(-d, p, t));
    EXPECT_EQ(commutator_omega_pi_closed(d, p, t, FormVariant::printed),
              -commutator_omega_pi_closed(-d, p, t, FormVariant::printed));
  }
}

TEST(OmegaPi, PrintedVariantDiffersFromDerived) {
  const FieldParams p{1.0, 0.5};
  const CommutationTable t;
  const Bicomplex a = commutator_omega_pi_closed(1.0, p, t);
  const Bicomplex b = commutator_omega_pi_closed(1.0, p, t, FormVariant::printed);
  EXPECT_GT(distance(a, b), 0.1);
}

TEST(OmegaPi, ClosedFormDomain) {
  const CommutationTable t;
  EXPECT_THROW(commutator_omega_pi_closed(0.0, {1.0, 0.5}, t), DomainError);
  EXPECT_THROW(commutator_omega_pi_closed(1.0, {0.5, 1.0}, t), DomainError);
  EXPECT_THROW(commutator_omega_pi_closed(1.0, {0.5, 2.0}, t), DomainError);
}

TEST(OmegaPi, QuadratureDoesNotConvergeAtOrigin) {
  EXPECT_THROW(commutator_omega_pi_quadrature(0.0, {1.0, 0.5}, {}, CommutationTable{}), NonConvergent);
}

TEST(OmegaTransform, MasslessAndTachyonicFormsMatchQuadrature) {
  for (double d : {0.7, 1.5, 4.0}) {
    EXPECT_LT(rel(omega_transform(d, 0.0), regulated_transform(SpectralWeight::omega, d, 0.0)), 1e-7);
    for (double M2 : {-0.04, -0.5}) {
      EXPECT_LT(rel(omega_transform(d, M2), regulated_transform(SpectralWeight::omega, d, M2)), 1e-7)
          << d << " " << M2;
      EXPECT_LT(rel(inverse_omega_transform(d, M2),
                    regulated_transform(SpectralWeight::inverse_omega, d, M2)),
                1e-7)
          << d << " " << M2;
    }
  }
}

TEST(OmegaTransform, LimitsInMass) {
  for (double d : {0.5, 2.0}) {
    const double massless = -2.0 / (d * d);
    EXPECT_LT(rel(omega_transform(d, 1e-12), massless), 1e-9);
    EXPECT_LT(rel(omega_transform(d, -1e-12), massless), 1e-9);
  }
  // exponential fall-off for a massive field
  const double far = std::abs(omega_transform(30.0, 1.0));
  EXPECT_LT(far, 1e-13);
  EXPECT_THROW(inverse_omega_transform(1.0, 0.0), DomainError);
}

TEST(MasslessLimit, DerivedUsesHalfGammaCutoff) {
  const CommutationTable t;
  for (double gamma : {0.3, 1.0, 2.0}) {
    for (double d : {0.5, 2.0}) {
      const double mu = gamma / 2;
      const double F = kPi * mu * std::cyl_neumann(1.0, mu * d) / d;
      EXPECT_LT(distance(commutator_omega_pi_m0_limit(d, gamma, t), Bicomplex{0.0, -F}), 1e-12);
      // the closed form continued below the cutoff agrees with its own quadrature
      const Bicomplex quad = commutator_omega_pi_quadrature(d, {0.0, gamma}, {}, t);
      EXPECT_LT(distance(commutator_omega_pi_m0_limit(d, gamma, t), quad),
                1e-7 * std::max(1.0, std::abs(F)));
    }
  }
  EXPECT_THROW(commutator_omega_pi_m0_limit(1.0, 0.0, t), DomainError);
}

TEST(MasslessLimit, PrintedVariant) {
  const double gamma = 0.8, d = 1.5;
  const double expected = gamma * bessel_k(1, std::pow(gamma, 4) / 16 * d);
  EXPECT_LT(distance(commutator_omega_pi_m0_limit(d, gamma, CommutationTable{}, FormVariant::printed),
                     Bicomplex{expected}),
            1e-12);
}

TEST(Weighted, BesselKernelsMatchQuadrature) {
  const CommutationTable t;
  Gen g(9);
  for (int s = 0; s < 8; ++s) {
    const FieldParams p{g.uniform(0.6, 2.0), g.uniform(0.0, 1.0)};
    const double d = g.uniform(0.4, 4.0);
    for (auto which : {WeightedWhich::omega_omega, WeightedWhich::pi_pi}) {
      const auto r = weighted_commutators(which, d, p, t);
      const Bicomplex quad = weighted_commutator_quadrature(which, d, p, t);
      EXPECT_LE(distance(r.value_at(d), quad), 1e-7 * magnitude(quad));
    }
  }
}

TEST(Weighted, ClosedForms) {
  const FieldParams p{1.0, 0.5};
  const CommutationTable t;
  const double M = std::sqrt(p.modified_mass_sq()), d = 1.3;
  const auto oo = weighted_commutators(WeightedWhich::omega_omega, d, p, t);
  EXPECT_EQ(oo.kernel, Kernel::bessel_K0);
  EXPECT_LT(std::abs(oo.value_at(d).x - 2 * hcqft::testing::bessel_k_integral(0, M * d)), 1e-12);
  const auto pp = weighted_commutators(WeightedWhich::pi_pi, d, p, t);
  EXPECT_EQ(pp.kernel, Kernel::bessel_K1_over_dx);
  EXPECT_LT(std::abs(pp.value_at(d).x - 2 * M / d * hcqft::testing::bessel_k_integral(1, M * d)), 1e-12);
  const auto op = weighted_commutators(WeightedWhich::omega_pi, d, p, t);
  EXPECT_EQ(op.kernel, Kernel::delta);
  EXPECT_LT(distance(op.coefficient, Bicomplex{0.0, -2 * kPi}), 1e-15);
  EXPECT_EQ(weighted_commutators(WeightedWhich::pi_pi, 0.0, p, t).kernel, Kernel::divergent);
  EXPECT_THROW(weighted_commutator_quadrature(WeightedWhich::omega_pi, d, p, t), DomainError);
}

TEST(Weighted, PiPiIsMinusIOmegaPiWhenBracketsAgree) {
  const FieldParams p{1.4, 0.6};
  const CommutationTable t;
  for (double d : {0.5, 1.0, 2.5}) {
    const Bicomplex pp = weighted_commutators(WeightedWhich::pi_pi, d, p, t).value_at(d);
    const Bicomplex op = commutator_omega_pi_closed(d, p, t);
    EXPECT_LT(distance(pp, Bicomplex{0.0, -1.0} * op), 1e-14);
  }
}

// ---- symbolic lattice ------------------------------------------------------

TEST(Lattice, CanonicalMomentumMatchesPiExpansion) {
  const Lattice lat{0.1, 6};
  for (const FieldParams p : {FieldParams{1.0, 0.5}, FieldParams{2.0, 1.3}}) {
    const auto pi = lattice_field(FieldKind::pi, p, lat);
    const auto derived = canonical_momentum(lattice_field(FieldKind::omega, p, lat), p);
    ASSERT_EQ(pi.size(), derived.size());
    std::map<ModeOp, FieldTerm> by_op;
    for (const auto& t : pi) by_op[t.op] = t;
    for (const auto& t : derived) {
      ASSERT_TRUE(by_op.count(t.op)) << to_string(t.op);
      const FieldTerm& e = by_op[t.op];
      EXPECT_LT(distance(t.coefficient, e.coefficient), 1e-14) << to_string(t.op);
      EXPECT_EQ(t.damping, e.damping);
      EXPECT_EQ(t.frequency, e.frequency);
      EXPECT_EQ(t.wave_number, e.wave_number);
    }
  }
}

TEST(Lattice, OmegaOmegaDaggerIsStaticAndGammaFree) {
  const Lattice lat{0.1, 8};
  const auto table = table_on(lat);
  LatticeKernel first;
  bool have = false;
  for (double gamma : {0.0, 0.5, 1.5}) {
    const FieldParams p{1.0, gamma};
    const auto w = lattice_field(FieldKind::omega, p, lat);
    const auto wd = lattice_field(FieldKind::omega_dagger, p, lat);
    for (double t : {0.0, 1.0, 10.0}) {
      const auto k = lattice_commutator(w, wd, t, table);
      EXPECT_TRUE(k.depends_only_on_separation());
      EXPECT_TRUE(k.hermitian());
      if (!have) {
        first = k;
        have = true;
      }
      EXPECT_EQ(k, first) << "gamma=" << gamma << " t=" << t;
    }
  }
  const auto s = delta_structure(first, lat);
  EXPECT_LT(distance(s.c0, omega_bracket(table)), 1e-13);
  EXPECT_LT(magnitude(s.c2), 1e-13);
}

TEST(Lattice, PiPiDaggerIsStaticWithMassDelta) {
  const Lattice lat{0.1, 8};
  const auto table = table_on(lat);
  const FieldParams p{1.0, 0.5};
  const auto a = lattice_field(FieldKind::pi, p, lat);
  const auto b = lattice_field(FieldKind::pi_dagger, p, lat);
  const auto k0 = lattice_commutator(a, b, 0.0, table);
  for (double t : {1.0, 10.0}) EXPECT_EQ(lattice_commutator(a, b, t, table), k0);
  EXPECT_TRUE(k0.hermitian());
  const auto s = delta_structure(k0, lat);
  const auto closed = commutator_pi_pidagger(table, p);
  // 2 pi (c0 delta - c2 delta'') against coefficient (c2' delta'' + c0' delta)
  const Bicomplex c = closed.coefficient * (1.0 / (2 * kPi));
  EXPECT_LT(distance(s.c0, c * closed.delta_coefficient), 1e-12);
  EXPECT_LT(distance(s.c2, c * -closed.delta_second_coefficient), 1e-12);
}

TEST(Lattice, PiPiDaggerDependsOnGammaOnlyThroughMass) {
  const Lattice lat{0.1, 8};
  const auto table = table_on(lat);
  const FieldParams p{1.0, 0.0};
  const FieldParams q{std::sqrt(1.0 + 0.25 * 0.64), 0.8};  // same m^2 - gamma^2/4
  auto kernel = [&](const FieldParams& f) {
    return lattice_commutator(lattice_field(FieldKind::pi, f, lat),
                              lattice_field(FieldKind::pi_dagger, f, lat), 0.0, table);
  };
  const auto a = delta_structure(kernel(p), lat);
  const auto b = delta_structure(kernel(q), lat);
  EXPECT_LT(distance(a.c0, b.c0), 1e-12);
  EXPECT_LT(distance(a.c2, b.c2), 1e-12);
}

TEST(Lattice, SigmaBreaksTimeIndependence) {
  const Lattice lat{0.1, 4};
  auto table = table_on(lat);
  for (auto& s : table.sigma) s = {0.3, 0.1};
  const FieldParams p{1.0, 0.5};
  const auto w = lattice_field(FieldKind::omega, p, lat);
  const auto wd = lattice_field(FieldKind::omega_dagger, p, lat);
  EXPECT_FALSE(lattice_commutator(w, wd, 0.0, table) == lattice_commutator(w, wd, 1.0, table));
}

TEST(Lattice, KernelEvaluationMatchesDeltaStructureSum) {
  const Lattice lat{0.1, 5};
  const auto table = table_on(lat);
  const FieldParams p{1.0, 0.5};
  const auto k = lattice_commutator(lattice_field(FieldKind::omega, p, lat),
                                    lattice_field(FieldKind::omega_dagger, p, lat), 2.0, table);
  // sum_k dk C e^{ik(x'-x)} for the unit bracket
  const double x = 0.4, xp = 1.7;
  double expected = 0;
  for (int n : lat.indices()) expected += lat.delta_k * std::cos(lat.momentum(n) * (xp - x));
  EXPECT_LT(distance(k.at(x, xp), Bicomplex{expected}), 1e-12);
}

TEST(Lattice, DeltaStructureRejectsNonSeparationKernels) {
  LatticeKernel k;
  k.terms[{0.1, 0.2}] = Bicomplex::one();
  EXPECT_FALSE(k.depends_only_on_separation());
  EXPECT_THROW(delta_structure(k, Lattice{0.1, 2}), DomainError);
}

// ---- sweeps ----------------------------------------------------------------

TEST(Figures, DeltaSweepMatchesClosedForm) {
  const FieldParams p{1.0, 0.5};
  const CommutationTable t;
  const Grid g{0.1, 5.0, 25};
  const auto rows = figure_data(Figure::fig1, g, p, t);
  ASSERT_EQ(rows.size(), 25u);
  EXPECT_DOUBLE_EQ(rows.front().x, 0.1);
  EXPECT_DOUBLE_EQ(rows.back().x, 5.0);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_LT(rows[i - 1].x, rows[i].x);
  for (const auto& r : rows) {
    const Bicomplex c = commutator_omega_pi_closed(r.x, p, t);
    EXPECT_EQ(r.re, c.x);
    EXPECT_EQ(r.im, c.y);
  }
}

TEST(Figures, MassSweepCrossesZero) {
  const FieldParams p{1.0, 0.5};
  const auto rows = figure_data(Figure::fig2, Grid{-1.0, 1.0, 5, 1.0}, p, CommutationTable{});
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_DOUBLE_EQ(rows[2].x, 0.0);
  EXPECT_DOUBLE_EQ(rows[2].im, 2.0);  // -i * (-2 / delta^2)
  for (const auto& r : rows) EXPECT_TRUE(std::isfinite(r.im));
}

TEST(Figures, WeightedMassSweepNeedsPositiveMass) {
  const FieldParams p{1.0, 0.5};
  EXPECT_THROW(figure_data(Figure::fig6b, Grid{0.0, 2.0, 5}, p, CommutationTable{}), DomainError);
  EXPECT_NO_THROW(figure_data(Figure::fig6b, Grid{0.1, 2.0, 5}, p, CommutationTable{}));
  EXPECT_NO_THROW(figure_data(Figure::fig7b, Grid{-1.0, 2.0, 4}, p, CommutationTable{}));
}

TEST(Figures, WeightedShapes) {
  const FieldParams p{1.0, 0.5};
  const auto k0 = figure_data(Figure::fig6a, Grid{0.2, 4.0, 20}, p, CommutationTable{});
  const auto k1 = figure_data(Figure::fig7a, Grid{0.2, 4.0, 20}, p, CommutationTable{});
  for (std::size_t i = 1; i < k0.size(); ++i) {
    EXPECT_LT(k0[i].re, k0[i - 1].re);  // both decay monotonically
    EXPECT_LT(k1[i].re, k1[i - 1].re);
    EXPECT_GT(k0[i].re, 0.0);
    EXPECT_GT(k1[i].re, 0.0);
  }
}

TEST(Figures, SeparationZeroInGridThrows) {
  EXPECT_THROW(figure_data(Figure::fig1, Grid{0.0, 1.0, 3}, {1.0, 0.5}, CommutationTable{}), DomainError);
  EXPECT_THROW(figure_data(Figure::fig1, Grid{0.1, 1.0, 0}, {1.0, 0.5}, CommutationTable{}), DomainError);
}

TEST(Figures, CsvLayout) {
  const std::vector<FigureRow> rows{{0.5, 1.25, -2.0}, {1.0, 0.0, 3.5}};
  const std::string csv = figure_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "x,re,im");
  std::getline(in, line);
  EXPECT_EQ(line, "0.500000000000000,1.250000000000000,-2.000000000000000");
  EXPECT_EQ(csv.find('e', csv.find('\n')), std::string::npos);
}
