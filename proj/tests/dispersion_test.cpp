#include "hcqft/dispersion.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "oracles.hpp"

namespace hcqft {
namespace {

using testing::distance;
using testing::Gen;

TEST(Dispersion, DissipativeCoefficients) {
  auto c0 = dissipative_coefficients({1.0, 0.0});
  EXPECT_EQ(c0.Gamma1, 0.0);
  EXPECT_EQ(c0.Gamma2, 0.0);
  auto c2 = dissipative_coefficients({1.0, 2.0});
  EXPECT_EQ(c2.Gamma1, -1.0);
  EXPECT_EQ(c2.Gamma2, 1.0);
  auto ch = dissipative_coefficients({1.0, 0.5});
  EXPECT_EQ(ch.Gamma1, -0.25);
  EXPECT_EQ(ch.Gamma2, 0.25);
}

TEST(Dispersion, Omega) {
  EXPECT_DOUBLE_EQ(omega(0.0, {1.0, 0.0}), 1.0);
  EXPECT_DOUBLE_EQ(omega(0.0, {2.0, 2.0}), std::sqrt(3.0));
  EXPECT_DOUBLE_EQ(omega(1.0, {1.0, 2.0}), 1.0);
  EXPECT_THROW(omega(0.1, {0.0, 2.0}), ImaginaryFrequency);
  EXPECT_NO_THROW(omega(1.0, {0.0, 2.0}));

  Gen gen;
  for (int n = 0; n < 200; ++n) {
    const FieldParams p{gen.uniform(0, 3), gen.uniform(0, 2)};
    const double k = gen.uniform(2, 5);
    EXPECT_EQ(omega(k, p), omega(-k, p));
  }
}

TEST(Dispersion, DampingFactorsAreReciprocal) {
  Gen gen;
  for (int n = 0; n < 200; ++n) {
    const auto c = dissipative_coefficients({1.0, gen.uniform(0, 3)});
    const double t = gen.uniform(-5, 5);
    EXPECT_NEAR(std::exp(c.Gamma1 * t) * std::exp(c.Gamma2 * t), 1.0, 1e-14);
  }
}

TEST(Dispersion, OnShellModesSolveEquationOfMotion) {
  Gen gen;
  for (int n = 0; n < 1000; ++n) {
    const FieldParams p{gen.uniform(0, 3), gen.uniform(0, 2)};
    const double cutoff = std::sqrt(std::max(0.0, -p.modified_mass_sq()));
    const double k = (gen.coin() ? 1 : -1) * (cutoff + gen.uniform(0, 4));
    const Branch b = gen.coin() ? Branch::plus : Branch::minus;
    const ModeSolution mode = make_mode(b, {k}, p, gen.bicomplex(), gen.bicomplex());
    const std::array<double, 1> x{gen.uniform(-5, 5)};
    const double t = gen.uniform(-3, 3);
    const double scale = eom_scale(mode, p, t);
    EXPECT_LE(magnitude(eom_residual(mode, p, x, t)), 1e-10 * scale);
  }
}

TEST(Dispersion, KleinGordonLimit) {
  const FieldParams p{1.3, 0.0};
  const ModeSolution mode = make_mode(Branch::plus, {0.8}, p);
  EXPECT_DOUBLE_EQ(mode.omega, std::sqrt(0.64 + 1.69));
  const std::array<double, 1> x{0.4};
  EXPECT_LE(magnitude(eom_residual(mode, p, x, 2.0)), 1e-12 * eom_scale(mode, p, 2.0));
}

TEST(Dispersion, FlippedGammaLeavesResidual) {
  // Substituting s = +gamma/2 + i omega into s^2 + gamma s + k^2 + m^2 gives
  // gamma^2 + 2 i gamma omega; J+ c has Euclidean size |c| / sqrt(2).
  const FieldParams p{1.0, 0.6};
  ModeSolution mode = make_mode(Branch::plus, {0.7}, p);
  mode.Gamma = -mode.Gamma;
  const std::array<double, 1> x{0.3};
  const double t = 1.1;
  const double w = mode.omega;
  const double expected = p.gamma * std::sqrt(p.gamma * p.gamma + 4 * w * w) *
                          std::exp(mode.Gamma * t) / std::sqrt(2.0);
  EXPECT_NEAR(magnitude(eom_residual(mode, p, x, t)), expected, 1e-12);
}

TEST(Dispersion, FieldValueAtOrigin) {
  const FieldParams p{1.0, 0.5};
  const std::array modes{make_mode(Branch::plus, {0.4}, p, Bicomplex{1.0}, Bicomplex{})};
  const std::array<double, 1> x{0.0};
  EXPECT_LT(distance(field_value(modes, x, 0.0), Jplus()), 1e-15);
}

TEST(Dispersion, ConjugationSwapsSectors) {
  Gen gen;
  const FieldParams p{1.0, 0.5};
  for (int n = 0; n < 100; ++n) {
    const ModeSolution m1 = make_mode(Branch::plus, {gen.uniform(-2, 2)}, p, gen.bicomplex(), gen.bicomplex());
    const ModeSolution m2 = make_mode(Branch::minus, {gen.uniform(-2, 2)}, p, gen.bicomplex(), gen.bicomplex());
    std::array modes{m1, m2};
    std::array mirrored{m1, m2};
    for (auto& m : mirrored) {
      m.branch = m.branch == Branch::plus ? Branch::minus : Branch::plus;
      const Bicomplex a = m.coeff_a;
      m.coeff_a = conj_bar(m.coeff_b);
      m.coeff_b = conj_bar(a);
    }
    const std::array<double, 1> x{gen.uniform(-3, 3)};
    const double t = gen.uniform(-2, 2);
    const Bicomplex lhs = conj_bar(field_value(modes, x, t));
    EXPECT_LT(distance(lhs, field_value(mirrored, x, t)), 1e-12 * (1 + magnitude(lhs)));
  }
}

TEST(Dispersion, UndampedModulusIsConstant) {
  const FieldParams p{1.0, 0.0};
  const std::array modes{make_mode(Branch::plus, {0.9}, p, Bicomplex{0.3, 0.4}, Bicomplex{})};
  const std::array<double, 1> x{0.2};
  const double ref = std::abs(idempotent_decompose(field_value(modes, x, 0.0)).plus);
  for (double t = 0.0; t < 10.0; t += 0.37) {
    EXPECT_NEAR(std::abs(idempotent_decompose(field_value(modes, x, t)).plus), ref, 1e-14);
  }
}

TEST(Dispersion, AnalyticDerivativesMatchFiniteDifferences) {
  Gen gen;
  const FieldParams p{1.2, 0.8};
  const double h = 1e-5;
  for (int n = 0; n < 100; ++n) {
    const std::array modes{
        make_mode(Branch::plus, {gen.uniform(-2, 2)}, p, gen.bicomplex(), gen.bicomplex()),
        make_mode(Branch::minus, {gen.uniform(-2, 2)}, p, gen.bicomplex(), gen.bicomplex())};
    const double x0 = gen.uniform(-3, 3), t = gen.uniform(-2, 2);
    const std::array<double, 1> x{x0}, xp{x0 + h}, xm{x0 - h};
    const Bicomplex dt_fd = (field_value(modes, x, t + h) - field_value(modes, x, t - h)) * (0.5 / h);
    const Bicomplex dx_fd = (field_value(modes, xp, t) - field_value(modes, xm, t)) * (0.5 / h);
    const Bicomplex dt = field_dt(modes, x, t);
    const Bicomplex dx = field_dx(modes, x, t);
    EXPECT_LT(distance(dt, dt_fd), 1e-7 * (1 + magnitude(dt)));
    EXPECT_LT(distance(dx, dx_fd), 1e-7 * (1 + magnitude(dx)));
  }
}

}  // namespace
}  // namespace hcqft
