#include "hcqft/operator_algebra.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <utility>

#include "hcqft/fsum.hpp"

namespace hcqft {
namespace {

using Monomial = OperatorPoly::Monomial;

int species_rank(Species s) {
  switch (s) {
    case Species::b1: return 0;
    case Species::a1: return 1;
    case Species::b2: return 2;
    case Species::a2: return 3;
  }
  return 4;
}

Monomial without(const Monomial& m, std::size_t i, std::size_t j) {
  Monomial out;
  out.reserve(m.size() - 2);
  for (std::size_t n = 0; n < m.size(); ++n) {
    if (n != i && n != j) out.push_back(m[n]);
  }
  return out;
}

bool nonzero(const Bicomplex& c) { return !c.is_zero(); }
bool nonzero(const Complex& c) { return c != Complex(0.0); }

// Rewrites every monomial into canonical order with XY = YX + [X, Y].
template <typename Scalar, typename Comm>
std::map<Monomial, Scalar> order_terms(std::vector<std::pair<Monomial, Scalar>> work, Comm comm) {
  std::map<Monomial, Scalar> out;
  while (!work.empty()) {
    auto [m, c] = std::move(work.back());
    work.pop_back();
    std::size_t i = 0;
    while (i + 1 < m.size() && !canonical_before(m[i + 1], m[i])) ++i;
    if (i + 1 >= m.size()) {
      auto it = out.find(m);
      if (it == out.end()) {
        out.emplace(std::move(m), c);
      } else {
        it->second += c;
        if (!nonzero(it->second)) out.erase(it);
      }
      continue;
    }
    const Scalar central = comm(m[i], m[i + 1]);
    if (nonzero(central)) work.emplace_back(without(m, i, i + 1), c * central);
    std::swap(m[i], m[i + 1]);
    work.emplace_back(std::move(m), c);
  }
  return out;
}

Complex component(const Bicomplex& c, bool plus) {
  const auto parts = idempotent_decompose(c);
  return plus ? parts.plus : parts.minus;
}

// Vacuum evaluation inside one idempotent sector. In the J+ sector the ket
// side is built from a1, b1 with pair value lambda1+, and the bra side from
// a2^+, b2^+ (adjoints of the J- sector ket operators); J- mirrors this.
class SectorEvaluator {
 public:
  SectorEvaluator(const CommutationTable& table, const VacuumRules& rules)
      : table_(table), rules_(rules) {}

  Complex comm(const ModeOp& x, const ModeOp& y, bool plus) const {
    const CentralValue cv = commutator_parts(x, y, table_);
    if (cv.is_zero()) return 0.0;
    return component(cv.coefficient, plus) * cv.delta;
  }

  static bool ket_species(Species s, bool plus) {
    return plus ? (s == Species::a1 || s == Species::b1) : (s == Species::a2 || s == Species::b2);
  }

  Complex lambda(bool plus) const {
    return plus ? component(rules_.lambda1, true) : component(rules_.lambda2, false);
  }

  // <0| m |0> for a canonically ordered monomial.
  Complex ordered_value(const Monomial& m, bool plus) const {
    std::size_t split = 0;
    while (split < m.size() && m[split].dagger) ++split;
    Monomial bra_adj;
    for (std::size_t n = split; n-- > 0;) {
      if (!ket_species(m[n].species, !plus)) undetermined(m);
      bra_adj.push_back(dag(m[n]));
    }
    Monomial ket(m.begin() + static_cast<std::ptrdiff_t>(split), m.end());
    for (const auto& o : ket) {
      if (!ket_species(o.species, plus)) undetermined(m);
    }
    const Complex ket_value = ordered_ket(ket, plus, m);
    if (bra_adj.empty()) return ket_value;
    return std::conj(any_ket(bra_adj, !plus, m)) * ket_value;
  }

  // Coefficient c with m |0> = c |0> for an unordered product of ket operators.
  Complex any_ket(const Monomial& m, bool plus, const Monomial& context) const {
    auto ordered = order_terms(std::vector<std::pair<Monomial, Complex>>{{m, Complex(1.0)}},
                               [&](const ModeOp& x, const ModeOp& y) { return comm(x, y, plus); });
    ExactComplexSum acc;
    for (const auto& [mon, w] : ordered) acc.add(w * ordered_ket(mon, plus, context));
    return acc.value();
  }

  // m holds b's left of a's. The rightmost b is moved next to the last a,
  // collecting [b, a_x] terms, and b(k') a(k) |0> = (lambda + [b, a]) / 2 |0>.
  Complex ordered_ket(const Monomial& m, bool plus, const Monomial& context) const {
    if (m.empty()) return 1.0;
    std::size_t last_b = m.size();
    std::size_t n_a = 0;
    for (std::size_t n = 0; n < m.size(); ++n) {
      if (is_a(m[n].species)) {
        ++n_a;
      } else {
        last_b = n;
      }
    }
    if (last_b == m.size() || 2 * n_a != m.size()) undetermined(context);
    const std::size_t last = m.size() - 1;
    ExactComplexSum acc;
    const Complex pair = 0.5 * (lambda(plus) + comm(m[last_b], m[last], plus));
    acc.add(pair * ordered_ket(without(m, last_b, last), plus, context));
    for (std::size_t x = last_b + 1; x < last; ++x) {
      const Complex c = comm(m[last_b], m[x], plus);
      if (nonzero(c)) acc.add(c * ordered_ket(without(m, last_b, x), plus, context));
    }
    return acc.value();
  }

  [[noreturn]] static void undetermined(const Monomial& m) {
    throw UndeterminedByAxioms("vacuum rules do not fix <0|" + to_string(OperatorPoly::monomial(m)) +
                               "|0>");
  }

 private:
  const CommutationTable& table_;
  const VacuumRules& rules_;
};

}  // namespace

bool is_a(Species s) { return s == Species::a1 || s == Species::a2; }

int superscript(Species s) { return (s == Species::a1 || s == Species::b1) ? 1 : 2; }

std::string to_string(const ModeOp& o) {
  static const char* names[] = {"a1", "a2", "b1", "b2"};
  std::ostringstream out;
  out << names[static_cast<int>(o.species)] << (o.dagger ? "^+" : "") << '[' << o.momentum_index
      << ']';
  return out.str();
}

bool canonical_before(const ModeOp& x, const ModeOp& y) {
  return std::make_tuple(!x.dagger, species_rank(x.species), x.momentum_index) <
         std::make_tuple(!y.dagger, species_rank(y.species), y.momentum_index);
}

Bicomplex CommutationTable::rho_at(int slot, int n, int np) const {
  if (rho_fn) return rho_fn(slot, lattice.momentum(n), lattice.momentum(np));
  return rho[slot];
}

Bicomplex CommutationTable::sigma_at(int slot, int n, int np) const {
  if (sigma_fn) return sigma_fn(slot, lattice.momentum(n), lattice.momentum(np));
  return sigma[slot];
}

bool CommutationTable::has_sigma() const {
  if (sigma_fn) return true;
  return std::any_of(sigma.begin(), sigma.end(), [](const Bicomplex& s) { return !s.is_zero(); });
}

CommutationTable CommutationTable::abelian(const Lattice& lattice) {
  CommutationTable t;
  t.lattice = lattice;
  t.rho = {};
  return t;
}

int rho_slot(Species a, Species b) {
  return 2 * (superscript(a) - 1) + (superscript(b) - 1);
}

CentralValue commutator_parts(const ModeOp& x, const ModeOp& y, const CommutationTable& table) {
  if (is_a(x.species) == is_a(y.species)) return {};
  const bool x_is_a = is_a(x.species);
  const ModeOp& a = x_is_a ? x : y;
  const ModeOp& b = x_is_a ? y : x;
  const double sign = x_is_a ? 1.0 : -1.0;
  const int slot = rho_slot(a.species, b.species);
  const Lattice& lat = table.lattice;

  if (!a.dagger && !b.dagger) {
    // [a(k), b(k')] = rho delta(k - k')
    const double d = lat.delta(a.momentum_index, b.momentum_index);
    if (d == 0.0) return {};
    return {table.rho_at(slot, a.momentum_index, b.momentum_index) * sign, d};
  }
  if (a.dagger && b.dagger) {
    // [b^+(k'), a^+(k)] = conj(rho) delta(k - k')
    const double d = lat.delta(a.momentum_index, b.momentum_index);
    if (d == 0.0) return {};
    return {conj_bar(table.rho_at(slot, a.momentum_index, b.momentum_index)) * (-sign), d};
  }
  const double d = lat.delta(lat.negate(a.momentum_index), b.momentum_index);
  if (d == 0.0) return {};
  if (!a.dagger) {
    // [a(k), b^+(k')] = sigma delta(k + k')
    return {table.sigma_at(slot, a.momentum_index, b.momentum_index) * sign, d};
  }
  // [b(k'), a^+(k)] = conj(sigma) delta(k + k')
  return {conj_bar(table.sigma_at(slot, a.momentum_index, b.momentum_index)) * (-sign), d};
}

Bicomplex commutator(const ModeOp& x, const ModeOp& y, const CommutationTable& table) {
  const CentralValue cv = commutator_parts(x, y, table);
  if (cv.is_zero()) return {};
  return cv.value();
}

OperatorPoly OperatorPoly::scalar(const Bicomplex& c) { return monomial({}, c); }

OperatorPoly OperatorPoly::monomial(Monomial m, const Bicomplex& c) {
  OperatorPoly p;
  p.add_term(m, c);
  return p;
}

void OperatorPoly::add_term(const Monomial& m, const Bicomplex& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Bicomplex OperatorPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Bicomplex{} : it->second;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OperatorPoly& OperatorPoly::operator*=(const Bicomplex& c) {
  Terms out;
  for (auto& [m, coeff] : terms_) {
    Bicomplex v = coeff * c;
    if (!v.is_zero()) out.emplace(m, v);
  }
  terms_ = std::move(out);
  return *this;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      m.insert(m.end(), mb.begin(), mb.end());
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

std::string to_string(const OperatorPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (!first) out << " + ";
    first = false;
    out << c;
    for (const auto& o : m) out << ' ' << to_string(o);
  }
  return out.str();
}

OperatorPoly adjoint(const OperatorPoly& p) {
  OperatorPoly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial r;
    r.reserve(m.size());
    for (auto it = m.rbegin(); it != m.rend(); ++it) r.push_back(dag(*it));
    out.add_term(r, conj_bar(c));
  }
  return out;
}

OperatorPoly normal_order(const OperatorPoly& p, const CommutationTable& table) {
  std::vector<std::pair<Monomial, Bicomplex>> work(p.terms().begin(), p.terms().end());
  auto ordered = order_terms(std::move(work), [&](const ModeOp& x, const ModeOp& y) {
    return commutator(x, y, table);
  });
  OperatorPoly out;
  for (const auto& [m, c] : ordered) out.add_term(m, c);
  return out;
}

bool is_canonical(const OperatorPoly& p) {
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      if (canonical_before(m[i + 1], m[i])) return false;
    }
  }
  return true;
}

OperatorPoly anticommutator(const ModeOp& x, const ModeOp& y) {
  OperatorPoly p = OperatorPoly::monomial({x, y});
  p.add_term({y, x}, Bicomplex{1.0});
  return p;
}

OperatorPoly commutator(const OperatorPoly& p, const OperatorPoly& q) { return p * q - q * p; }

VacuumRules VacuumRules::constrained_by(const Complex& c1, const Complex& c2) {
  VacuumRules r;
  r.lambda1 = Jminus() * from_complex(c1);
  r.lambda2 = Jplus() * from_complex(c2);
  r.constrained = true;
  return r;
}

Bicomplex vev(const OperatorPoly& p, const VacuumRules& rules, const CommutationTable& table) {
  if (rules.constrained &&
      (component(rules.lambda1, true) != Complex(0.0) || component(rules.lambda2, false) != Complex(0.0))) {
    throw DomainError("constrained vacuum rules need J+ lambda1 = J- lambda2 = 0");
  }
  SectorEvaluator eval(table, rules);
  ExactComplexSum acc[2];
  for (const auto& [m, c] : p.terms()) {
    for (int s = 0; s < 2; ++s) {
      const bool plus = s == 0;
      const Complex cs = component(c, plus);
      if (cs == Complex(0.0)) continue;
      auto ordered = order_terms(std::vector<std::pair<Monomial, Complex>>{{m, Complex(1.0)}},
                                 [&](const ModeOp& x, const ModeOp& y) { return eval.comm(x, y, plus); });
      for (const auto& [mon, w] : ordered) acc[s].add(cs * (w * eval.ordered_value(mon, plus)));
    }
  }
  return idempotent_recompose(acc[0].value(), acc[1].value());
}

bool pair_commutation_check(const CommutationTable& table) {
  static const Species all[] = {Species::a1, Species::a2, Species::b1, Species::b2};
  const auto sites = table.lattice.indices();
  for (Species x : all) {
    for (Species y : all) {
      for (int n : sites) {
        for (int np : sites) {
          if (!commutator_parts(op(x, n), op(y, np, true), table).is_zero()) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace hcqft
