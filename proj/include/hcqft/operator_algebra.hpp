#pragma once

#include <array>
#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "hcqft/bicomplex.hpp"
#include "hcqft/lattice.hpp"

namespace hcqft {

enum class Species { a1, a2, b1, b2 };

struct ModeOp {
  Species species = Species::a1;
  int momentum_index = 0;
  bool dagger = false;

  auto operator<=>(const ModeOp&) const = default;
};

inline ModeOp op(Species s, int n, bool dagger = false) { return {s, n, dagger}; }
inline ModeOp dag(ModeOp o) {
  o.dagger = !o.dagger;
  return o;
}

bool is_a(Species s);
/// 1 for a1/b1, 2 for a2/b2.
int superscript(Species s);
std::string to_string(const ModeOp& o);

/// True when x stands strictly left of y in canonical order: creators first,
/// then species b1, a1, b2, a2, then ascending momentum.
bool canonical_before(const ModeOp& x, const ModeOp& y);

/// slot 0..3 selects rho_1..rho_4 (or sigma_1..sigma_4); k and k' are momenta.
using MomentumCoefficient = std::function<Bicomplex(int slot, double k, double kp)>;

/// [a_i(k), b_j(k')] = rho delta(k - k'),    [b_j^+(k'), a_i^+(k)] = conj(rho) delta(k - k'),
/// [a_i(k), b_j^+(k')] = sigma delta(k + k'), [b_j(k'), a_i^+(k)] = conj(sigma) delta(k + k'),
/// with (i, j) -> slot (1,1)->0, (1,2)->1, (2,1)->2, (2,2)->3. Every other
/// pair commutes.
struct CommutationTable {
  Lattice lattice;
  std::array<Bicomplex, 4> rho{Bicomplex{1.0}, Bicomplex{}, Bicomplex{}, Bicomplex{}};
  std::array<Bicomplex, 4> sigma{};
  MomentumCoefficient rho_fn;    // overrides rho when set
  MomentumCoefficient sigma_fn;  // overrides sigma when set

  [[nodiscard]] Bicomplex rho_at(int slot, int n, int np) const;
  [[nodiscard]] Bicomplex sigma_at(int slot, int n, int np) const;
  [[nodiscard]] bool has_sigma() const;

  static CommutationTable abelian(const Lattice& lattice);
};

int rho_slot(Species a, Species b);

/// Central value of [x, y] as a ring coefficient times its lattice delta.
struct CentralValue {
  Bicomplex coefficient;
  double delta = 0.0;

  [[nodiscard]] Bicomplex value() const { return coefficient * delta; }
  [[nodiscard]] bool is_zero() const { return delta == 0.0 || coefficient.is_zero(); }
};

CentralValue commutator_parts(const ModeOp& x, const ModeOp& y, const CommutationTable& table);
Bicomplex commutator(const ModeOp& x, const ModeOp& y, const CommutationTable& table);

class OperatorPoly {
 public:
  using Monomial = std::vector<ModeOp>;
  using Terms = std::map<Monomial, Bicomplex>;

  OperatorPoly() = default;
  static OperatorPoly scalar(const Bicomplex& c);
  static OperatorPoly monomial(Monomial m, const Bicomplex& c = Bicomplex{1.0});

  /// Adds c to the coefficient of m; exact cancellations drop the term.
  void add_term(const Monomial& m, const Bicomplex& c);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }
  [[nodiscard]] Bicomplex coefficient(const Monomial& m) const;

  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  OperatorPoly& operator*=(const Bicomplex& c);

  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(OperatorPoly a, const Bicomplex& c) { return a *= c; }
  friend OperatorPoly operator*(const Bicomplex& c, OperatorPoly a) { return a *= c; }
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

std::string to_string(const OperatorPoly& p);

/// Reversed monomials, flipped daggers, conj_bar coefficients.
OperatorPoly adjoint(const OperatorPoly& p);
OperatorPoly normal_order(const OperatorPoly& p, const CommutationTable& table);
bool is_canonical(const OperatorPoly& p);
OperatorPoly anticommutator(const ModeOp& x, const ModeOp& y);
/// p q - q p, unordered.
OperatorPoly commutator(const OperatorPoly& p, const OperatorPoly& q);

/// Pair-coherent vacuum: J+{a1(k), b1(k')}|0> = J+ lambda1 |0> and
/// J-{b2(k'), a2(k)}|0> = J- lambda2 |0> for every k, k'.
struct VacuumRules {
  Bicomplex lambda1{};
  Bicomplex lambda2{};
  bool constrained = false;

  /// lambda1 = J- c1, lambda2 = J+ c2, so J+ lambda1 = J- lambda2 = 0.
  static VacuumRules constrained_by(const Complex& c1, const Complex& c2);
};

/// Vacuum expectation value. Monomials outside the fragment fixed by the
/// pair rules raise UndeterminedByAxioms.
Bicomplex vev(const OperatorPoly& p, const VacuumRules& rules, const CommutationTable& table);

/// True iff every annihilator commutes with every creator on the lattice.
bool pair_commutation_check(const CommutationTable& table);

}  // namespace hcqft
