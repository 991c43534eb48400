#include "hcqft/entangled_states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <Eigen/SVD>

#include "hcqft/errors.hpp"

namespace hcqft {
namespace {

constexpr double kPi = std::numbers::pi;

using SectorLabels = std::vector<std::pair<PairLabel, Complex>>;

// Splits the exponent into the J+ (superscript 2) and J- (superscript 1)
// label lists, merging repeated labels and dropping zero weights.
std::pair<SectorLabels, SectorLabels> sector_labels(const PairExponent& x) {
  std::map<PairLabel, Complex> plus, minus;
  for (const auto& t : x) {
    for (bool swapped : {false, true}) {
      if (t.plus != Complex(0.0)) plus[{PairTag::two_ba, t.n_a, t.n_b, swapped}] += t.plus;
      if (t.minus != Complex(0.0)) minus[{PairTag::one_ab, t.n_a, t.n_b, swapped}] += t.minus;
    }
  }
  auto flatten = [](const std::map<PairLabel, Complex>& m) {
    SectorLabels out;
    for (const auto& [l, c] : m) {
      if (c != Complex(0.0)) out.emplace_back(l, c);
    }
    return out;
  };
  return {flatten(plus), flatten(minus)};
}

// Multisets of size 1..order drawn from n labels.
double multisets_up_to(std::size_t n, int order) {
  double total = 0.0, term = 1.0;
  for (int k = 1; k <= order; ++k) {
    term *= static_cast<double>(n + k - 1) / k;
    total += term;
  }
  return total;
}

void expand_sector(const SectorLabels& labels, int order, const Bicomplex& projector,
                   StateVector& out) {
  KetLabel ket;
  // depth-first over non-decreasing label indices; m is the multiplicity of
  // the last label, so the running amplitude is prod c^m / m!.
  auto recurse = [&](auto&& self, std::size_t start, Complex amp, int m) -> void {
    if (!ket.empty()) out.amplitudes[ket] = projector * from_complex(amp);
    if (static_cast<int>(ket.size()) == order) return;
    for (std::size_t i = start; i < labels.size(); ++i) {
      const bool repeat = !ket.empty() && ket.back() == labels[i].first;
      const int next_m = repeat ? m + 1 : 1;
      ket.push_back(labels[i].first);
      self(self, i, amp * labels[i].second / static_cast<double>(next_m), next_m);
      ket.pop_back();
    }
  };
  recurse(recurse, 0, Complex(1.0), 0);
}

Complex lattice_sum_coefficients(const PairExponent& x) {
  Complex s;
  for (const auto& t : x) s += t.plus;
  return s;
}

void require_no_zero_momentum(const Lattice& lattice) {
  for (int n : lattice.indices()) {
    if (lattice.momentum(n) == 0.0) {
      throw PoleAtZeroMomentum("eta_k has a pole at k = 0; use a staggered lattice");
    }
  }
}

using PartKey = std::vector<std::array<int, 5>>;


}  // namespace

std::string to_string(const PairLabel& p) {
  std::ostringstream out;
  if (p.tag == PairTag::one_ab) {
    if (!p.swapped) out << "1a(" << p.n_a << ")1b(" << p.n_b << ")";
    else out << "1b(" << p.n_b << ")1a(" << p.n_a << ")";
  } else {
    if (!p.swapped) out << "2b(" << p.n_b << ")2a(" << p.n_a << ")";
    else out << "2a(" << p.n_a << ")2b(" << p.n_b << ")";
  }
  return out.str();
}

std::string to_string(const KetLabel& k) {
  if (k.empty()) return "|0>";
  std::string s = "|";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? "," : "") + to_string(k[i]);
  return s + ">";
}

Bicomplex StateVector::amplitude(const KetLabel& k) const {
  auto it = amplitudes.find(k);
  return it == amplitudes.end() ? Bicomplex{} : it->second;
}

std::size_t basis_size(const PairExponent& x, int order) {
  if (order < 0) throw DomainError("truncation order must be >= 0");
  const auto [plus, minus] = sector_labels(x);
  const double n = 1.0 + multisets_up_to(plus.size(), order) + multisets_up_to(minus.size(), order);
  return n >= static_cast<double>(std::numeric_limits<std::size_t>::max())
             ? std::numeric_limits<std::size_t>::max()
             : static_cast<std::size_t>(n);
}

StateVector exponentiate(const PairExponent& x, int order, std::size_t max_kets) {
  const std::size_t n = basis_size(x, order);
  if (n > max_kets) {
    std::ostringstream msg;
    msg << "order " << order << " needs " << n << " kets (cap " << max_kets << ")";
    throw TruncationOrderTooLarge(msg.str());
  }
  const auto [plus, minus] = sector_labels(x);
  StateVector s;
  s.truncation_order = order;
  s.amplitudes[{}] = Bicomplex::one();
  expand_sector(plus, order, Jplus(), s);
  expand_sector(minus, order, Jminus(), s);
  return s;
}

PairExponent evolution_exponent(double t, const FieldParams& params, const GeometrySpec& geom,
                                const Lattice& lattice) {
  geom.validate();
  const double dk = lattice.delta_k;
  const Complex it(0.0, t);
  PairExponent x;
  if (geom.kind == GeometryKind::infinite_line) {
    for (int n : lattice.indices()) {
      const double k = lattice.momentum(n);
      const Complex c = it * std::conj(h_gamma(k, k, params)) * (2.0 * kPi * dk);
      x.push_back({n, n, c, c});
    }
    return x;
  }
  for (int n : lattice.indices()) {
    const double k = lattice.momentum(n);
    const double w = omega(k, params);
    for (int np : lattice.indices()) {
      const double kp = lattice.momentum(np);
      const Complex G = std::polar(1.0, (w - omega(kp, params)) * t) * geometry_kernel(k - kp, geom, dk);
      const Complex c = it * std::conj(h_gamma(k, kp, params) * G) * (dk * dk);
      x.push_back({n, np, c, c});
    }
  }
  return x;
}

StateVector evolve_vacuum(double t, int order, const FieldParams& params, const GeometrySpec& geom,
                          const CommutationTable& table, const VacuumRules& rules,
                          std::size_t max_kets) {
  if (!rules.constrained) {
    throw DomainError("evolve_vacuum needs constrained vacuum rules (lambda1 ~ J-, lambda2 ~ J+)");
  }
  return exponentiate(evolution_exponent(t, params, geom, table.lattice), order, max_kets);
}

PhasePair overlap_phases(double t, const FieldParams& params, const GeometrySpec& geom,
                         const CommutationTable& table, const VacuumRules& rules) {
  const Bicomplex z = Bicomplex::i() * vev_H(params, geom, table, rules) * t;
  return {z.y, z.u};
}

Bicomplex overlap_with_vacuum(double t, const FieldParams& params, const GeometrySpec& geom,
                              const CommutationTable& table, const VacuumRules& rules) {
  const PhasePair p = overlap_phases(t, params, geom, table, rules);
  return exp_bicomplex(p.alpha, p.beta);
}

double norm_deviation(const StateVector& state) {
  Bicomplex sum;
  for (const auto& [k, a] : state.amplitudes) sum += conj_bar(a) * a;
  return magnitude(sum - Bicomplex::one());
}

double norm_preservation(double t, int order, const FieldParams& params, const GeometrySpec& geom,
                         const CommutationTable& table, const VacuumRules& rules) {
  return norm_deviation(evolve_vacuum(t, order, params, geom, table, rules));
}

double truncation_remainder(const PairExponent& x, int order) {
  if (order < 0) throw DomainError("truncation order must be >= 0");
  const auto [plus, minus] = sector_labels(x);
  const int degree = order + 1;
  // Coefficient of z^degree in prod_p sum_m |c_p|^{2m} / (m!)^2 z^m.
  auto sector = [degree](const SectorLabels& labels) {
    std::vector<double> poly(degree + 1, 0.0);
    poly[0] = 1.0;
    for (const auto& [l, c] : labels) {
      const double a = std::norm(c);
      std::vector<double> next(degree + 1, 0.0);
      for (int i = 0; i <= degree; ++i) {
        double w = 1.0;
        for (int m = 0; i + m <= degree; ++m) {
          next[i + m] += poly[i] * w;
          w *= a / ((m + 1.0) * (m + 1.0));
        }
      }
      poly = std::move(next);
    }
    return std::sqrt(poly[degree]);
  };
  return std::max(sector(plus), sector(minus));
}

double exponent_norm(const PairExponent& x) {
  const auto [plus, minus] = sector_labels(x);
  auto l1 = [](const SectorLabels& labels) {
    double s = 0.0;
    for (const auto& [l, c] : labels) s += std::abs(c);
    return s;
  };
  return std::max(l1(plus), l1(minus));
}

Complex eta(double k, const FieldParams& params) {
  if (k == 0.0) throw PoleAtZeroMomentum("eta_k is singular at k = 0");
  const double w = omega(k, params);
  return {w * w * w / k, -2.0 * w * w * params.gamma / k};
}

PairExponent finite_asymptotic_exponent(const FieldParams& params, const GeometrySpec& geom,
                                        const Lattice& lattice, const AsymptoticOptions& opts) {
  geom.validate();
  if (geom.kind != GeometryKind::finite_interval) {
    throw DomainError("the finite asymptotic state needs a finite interval");
  }
  require_no_zero_momentum(lattice);
  const double L = geom.length(), dk = lattice.delta_k;
  PairExponent x;
  for (int n : lattice.indices()) {
    const double k = lattice.momentum(n);
    if (opts.contraction == Contraction::printed) {
      const Complex c = 5.0 * L * dk * eta(k, params);
      x.push_back({n, n, c, c});
      continue;
    }
    const double jac = omega(k, params) / std::abs(k);
    const Complex c = std::conj(h_gamma(k, k, params)) * (L * dk * jac);
    x.push_back({n, n, c, c});
    if (opts.reflected_branch) {
      const int nr = lattice.negate(n);
      if (!lattice.contains(nr)) continue;
      const double kr = lattice.momentum(nr);
      const Complex cr = std::conj(h_gamma(k, kr, params) * geometry_kernel(k - kr, geom, dk)) * (dk * jac);
      x.push_back({n, nr, cr, cr});
    }
  }
  return x;
}

StateVector asymptotic_state_finite(int order, const FieldParams& params, double L1, double L2,
                                    const CommutationTable& table, const AsymptoticOptions& opts) {
  const GeometrySpec geom{GeometryKind::finite_interval, L1, L2};
  return exponentiate(finite_asymptotic_exponent(params, geom, table.lattice, opts), order, opts.max_kets);
}

PairExponent infinite_asymptotic_exponent(double t, const FieldParams& params, const Lattice& lattice) {
  PairExponent x;
  for (int n : lattice.indices()) {
    const double w = omega(lattice.momentum(n), params);
    const Complex c = Complex(params.gamma * w, 5.0 * w * w) * (kPi * t * lattice.delta_k);
    x.push_back({n, n, c, c});
  }
  return x;
}

StateVector asymptotic_state_infinite_at(double t, int order, const FieldParams& params,
                                         const CommutationTable& table, std::size_t max_kets) {
  return exponentiate(infinite_asymptotic_exponent(t, params, table.lattice), order, max_kets);
}

AsymptoticDiagnostics asymptotic_state_infinite(const std::vector<double>& t_values,
                                                const FieldParams& params, const CommutationTable& table) {
  AsymptoticDiagnostics d;
  const Lattice& lat = table.lattice;
  double sum_w = 0.0;
  for (int n : lat.indices()) sum_w += omega(lat.momentum(n), params);
  d.expected_growth_rate = kPi * params.gamma * lat.delta_k * sum_w;

  for (double t : t_values) {
    const PairExponent x = infinite_asymptotic_exponent(t, params, lat);
    const Complex s = lattice_sum_coefficients(x);
    d.t.push_back(t);
    d.log_modulus.push_back(s.real());
    d.phase.push_back(s.imag());
    for (const auto& term : x) {
      d.max_mode_drift = std::max(d.max_mode_drift, std::abs(std::abs(std::exp(term.plus)) - 1.0));
    }
  }
  const std::size_t n = d.t.size();
  if (n >= 2) {
    double mt = 0, ml = 0;
    for (std::size_t i = 0; i < n; ++i) {
      mt += d.t[i] / n;
      ml += d.log_modulus[i] / n;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      sxy += (d.t[i] - mt) * (d.log_modulus[i] - ml);
      sxx += (d.t[i] - mt) * (d.t[i] - mt);
    }
    if (sxx > 0) d.modulus_growth_rate = sxy / sxx;
  }
  d.is_cyclostationary = d.max_mode_drift < 1e-12;
  d.divergent = d.modulus_growth_rate > 0.0;
  return d;
}

StateVector project_view(const StateVector& state, Side side) {
  const Bicomplex p = side == Side::plus ? Jplus() : Jminus();
  StateVector out;
  out.truncation_order = state.truncation_order;
  for (const auto& [k, a] : state.amplitudes) {
    const Bicomplex v = p * a;
    if (!v.is_zero()) out.amplitudes.emplace(k, v);
  }
  return out;
}

std::set<ModeLabel> momentum_modes(const std::set<int>& momenta) {
  std::set<ModeLabel> out;
  for (int n : momenta) {
    for (int sup : {1, 2}) {
      for (char sp : {'a', 'b'}) out.insert({sup, sp, n});
    }
  }
  return out;
}

namespace {

std::vector<double> to_std(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace

std::vector<double> sparse_singular_values(long nr, long nc, std::vector<SparseEntry> entries, long dense_limit) {
  if (nr == 0 || nc == 0) return {};
  if (nr * nc <= dense_limit) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(nr, nc);
    for (const auto& e : entries) m(e.r, e.c) += e.v;
    return to_std(Eigen::BDCSVD<Eigen::MatrixXcd>(m).singularValues());
  }
  const bool rows_short = nr <= nc;
  const long n_short = rows_short ? nr : nc;
  auto long_of = [&](const SparseEntry& e) { return rows_short ? e.c : e.r; };
  auto short_of = [&](const SparseEntry& e) { return rows_short ? e.r : e.c; };
  std::sort(entries.begin(), entries.end(),
            [&](const SparseEntry& a, const SparseEntry& b) { return long_of(a) < long_of(b); });
  const long block = std::max<long>(2048, 4 * n_short);
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(n_short, n_short);
  std::size_t i = 0;
  while (i < entries.size()) {
    const long first = long_of(entries[i]);
    Eigen::MatrixXcd stack = Eigen::MatrixXcd::Zero(n_short + block, n_short);
    stack.topRows(n_short) = R;
    for (; i < entries.size() && long_of(entries[i]) < first + block; ++i) {
      stack(n_short + long_of(entries[i]) - first, short_of(entries[i])) += entries[i].v;
    }
    const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(stack);
    R = qr.matrixQR().topRows(n_short).triangularView<Eigen::Upper>();
  }
  return to_std(Eigen::BDCSVD<Eigen::MatrixXcd>(R).singularValues());
}

int schmidt_rank(const StateVector& state, const std::set<ModeLabel>& part, double threshold) {
  std::map<PartKey, Eigen::Index> rows, cols;
  struct Entry {
    Eigen::Index r, c;
    IdempotentParts v;
  };
  std::vector<Entry> entries;
  for (const auto& [ket, amp] : state.amplitudes) {
    PartKey a, b;
    for (const auto& p : ket) {
      const int sup = p.tag == PairTag::one_ab ? 1 : 2;
      const int tag = static_cast<int>(p.tag);
      const bool in_a = part.count({sup, 'a', p.n_a}) > 0;
      const bool in_b = part.count({sup, 'b', p.n_b}) > 0;
      const std::array<int, 5> whole{tag, p.n_a, p.n_b, p.swapped, 0};
      if (in_a && in_b) {
        a.push_back(whole);
      } else if (!in_a && !in_b) {
        b.push_back(whole);
      } else {
        // split pair: the ordering tag travels with the part-side mode
        const int sp_part = in_a ? 'a' : 'b', n_part = in_a ? p.n_a : p.n_b;
        const int sp_rest = in_a ? 'b' : 'a', n_rest = in_a ? p.n_b : p.n_a;
        a.push_back({tag, sp_part, n_part, p.swapped, 1});
        b.push_back({tag, sp_rest, n_rest, 0, 2});
      }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const auto r = rows.try_emplace(a, static_cast<Eigen::Index>(rows.size())).first->second;
    const auto c = cols.try_emplace(b, static_cast<Eigen::Index>(cols.size())).first->second;
    entries.push_back({r, c, idempotent_decompose(amp)});
  }
  if (entries.empty()) return 0;

  int rank = 0;
  const auto nr = static_cast<long>(rows.size()), nc = static_cast<long>(cols.size());
  for (bool plus : {true, false}) {
    int rank_here = 0;
    std::vector<SparseEntry> sector;
    sector.reserve(entries.size());
    for (const auto& e : entries) {
      const Complex v = plus ? e.v.plus : e.v.minus;
      if (v != Complex(0.0)) sector.push_back({e.r, e.c, v});
    }
    for (double sv : sparse_singular_values(nr, nc, std::move(sector))) rank_here += sv > threshold;
    rank = std::max(rank, rank_here);
  }
  return rank;
}

}  // namespace hcqft
