#include "hcqft/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "hcqft/errors.hpp"

namespace hcqft {
namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

struct Accumulator {
  double sum = 0.0;
  double abs_sum = 0.0;
};

// Gauss-Legendre on [a, b]; the 20-point rule has no node at the centre.
template <typename F>
void panel(F f, double a, double b, Accumulator& acc) {
  const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lo = f(mid - half * x[i]), hi = f(mid + half * x[i]);
    acc.sum += half * w[i] * (lo + hi);
    acc.abs_sum += half * w[i] * (std::abs(lo) + std::abs(hi));
  }
}

template <typename F>
void panels(F f, double a, double b, double width, Accumulator& acc) {
  if (b <= a) return;
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
  const double h = (b - a) / n;
  for (int i = 0; i < n; ++i) panel(f, a + i * h, i + 1 == n ? b : a + (i + 1) * h, acc);
}

double start_epsilon(double delta, const QuadratureSpec& spec) {
  if (spec.regulator_epsilon > 0.0) return spec.regulator_epsilon;
  return delta != 0.0 ? delta * delta / 400.0 : 1e-2;
}

// 2 int_{k0}^{K} f(k) cos(k delta) e^{-eps k^2} dk; the sine part cancels
// between k and -k because f is even.
Accumulator integrate(SpectralWeight weight, double delta, double M2, double epsilon,
                      const QuadratureSpec& spec) {
  const double k_max = spec.k_max > 0.0 ? spec.k_max : std::sqrt(40.0 / epsilon);
  const double period = delta != 0.0 ? 2.0 * std::numbers::pi / std::abs(delta) : 1e300;
  const double width = std::min(1.0, 20.0 * period / std::max(spec.samples, 20));
  const bool inverse = weight == SpectralWeight::inverse_omega;
  auto damp = [&](double k) { return std::cos(k * delta) * std::exp(-epsilon * k * k); };

  Accumulator acc;
  double k_lo = 0.0;
  if (M2 < 0.0) {
    // k = mu cosh s on [mu, 2 mu] removes the square-root endpoint:
    // omega dk = mu^2 sinh^2 s ds, dk / omega = ds.
    const double mu = std::sqrt(-M2);
    auto sub = [&](double s) {
      const double k = mu * std::cosh(s);
      const double sh = std::sinh(s);
      return (inverse ? 1.0 : mu * mu * sh * sh) * damp(k);
    };
    const double s_top = std::acosh(2.0);
    panels(sub, 0.0, s_top, std::min(s_top / 8.0, width / (2.0 * mu)), acc);
    k_lo = 2.0 * mu;
  }
  auto direct = [&](double k) {
    const double w = std::sqrt(k * k + M2);
    return (inverse ? 1.0 / w : w) * damp(k);
  };
  if (M2 == 0.0 && inverse) throw DomainError("1/omega is not integrable at k = 0 when M^2 = 0");
  panels(direct, k_lo, std::max(k_lo, k_max), width, acc);
  acc.sum *= 2.0;
  acc.abs_sum *= 2.0;
  return acc;
}

}  // namespace

double regulated_integral(SpectralWeight weight, double delta, double M2, double epsilon,
                          const QuadratureSpec& spec) {
  if (!(epsilon > 0.0)) throw DomainError("regulator epsilon must be positive");
  return integrate(weight, delta, M2, epsilon, spec).sum;
}

double regulated_transform(SpectralWeight weight, double delta, double M2,
                           const QuadratureSpec& spec) {
  if (spec.extrapolation_steps < 2) throw DomainError("need at least two extrapolation steps");
  const int levels = spec.extrapolation_steps + 1;
  double epsilon = start_epsilon(delta, spec);

  // Richardson tableau for an expansion in integer powers of epsilon.
  std::vector<std::vector<double>> R(levels);
  double floor = 0.0;
  for (int j = 0; j < levels; ++j, epsilon *= 0.5) {
    const Accumulator acc = integrate(weight, delta, M2, epsilon, spec);
    floor = std::max(floor, acc.abs_sum);
    R[j].push_back(acc.sum);
    for (int l = 1; l <= j; ++l) {
      const double scale = std::ldexp(1.0, l) - 1.0;
      R[j].push_back(R[j][l - 1] + (R[j][l - 1] - R[j - 1][l - 1]) / scale);
    }
  }
  const double best = R[levels - 1][levels - 1];
  const double prev = R[levels - 2][levels - 2];
  const double gap = std::abs(best - prev);
  if (!std::isfinite(best) || gap > spec.tolerance * std::abs(best) + 1e-13 * floor) {
    std::ostringstream msg;
    msg << "regulator extrapolation did not settle at delta = " << delta << " (last step moved by "
        << gap << ")";
    throw NonConvergent(msg.str());
  }
  return best;
}

}  // namespace hcqft
