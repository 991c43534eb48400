#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "hcqft/bicomplex.hpp"
#include "hcqft/dispersion.hpp"
#include "hcqft/observables.hpp"
#include "hcqft/operator_algebra.hpp"

namespace hcqft {

/// one_ab: |1a_k, 1b_k'>, created by J-{a1+(k), b1+(k')}.
/// two_ba: |2b_k', 2a_k>, created by J+{b2+(k'), a2+(k)}.
/// `swapped` selects the reversed ket order of the anticommutator.
enum class PairTag { one_ab, two_ba };

struct PairLabel {
  PairTag tag = PairTag::one_ab;
  int n_a = 0;
  int n_b = 0;
  bool swapped = false;

  friend auto operator<=>(const PairLabel&, const PairLabel&) = default;
};

/// Sorted multiset of pairs; empty for the vacuum.
using KetLabel = std::vector<PairLabel>;

std::string to_string(const PairLabel& p);
std::string to_string(const KetLabel& k);

struct StateVector {
  std::map<KetLabel, Bicomplex> amplitudes;
  int truncation_order = 0;

  [[nodiscard]] Bicomplex amplitude(const KetLabel& k) const;
  [[nodiscard]] std::size_t size() const { return amplitudes.size(); }
};

/// One creation-pair term c W(k, k') with separate sector weights:
/// J+ plus {b2+(k'), a2+(k)} + J- minus {a1+(k), b1+(k')}.
struct PairTerm {
  int n_a = 0;
  int n_b = 0;
  Complex plus;
  Complex minus;
};
using PairExponent = std::vector<PairTerm>;

inline constexpr std::size_t kDefaultKetCap = 1'000'000;

/// Number of kets e^X |0> truncated at `order` would hold.
std::size_t basis_size(const PairExponent& x, int order);

/// sum_{n <= order} X^n / n! |0>, each sector separately. Pair operators
/// commute, so the amplitude of a multiset is prod c^m / m!.
StateVector exponentiate(const PairExponent& x, int order, std::size_t max_kets = kDefaultKetCap);

/// i t times the creation part of the Hamiltonian: dk^2 conj(H_gamma G) W(k, k')
/// on a finite interval, 2 pi dk conj(H_gamma(k, k)) W(k, k) on the line.
PairExponent evolution_exponent(double t, const FieldParams& params, const GeometrySpec& geom,
                                const Lattice& lattice);

/// Needs rules.constrained (the annihilator pairs then act as zero).
StateVector evolve_vacuum(double t, int order, const FieldParams& params, const GeometrySpec& geom,
                          const CommutationTable& table, const VacuumRules& rules,
                          std::size_t max_kets = kDefaultKetCap);

struct PhasePair {
  double alpha = 0.0;
  double beta = 0.0;
};

/// i t <H> = i alpha + j beta (the 1 and ij parts vanish identically).
PhasePair overlap_phases(double t, const FieldParams& params, const GeometrySpec& geom,
                         const CommutationTable& table, const VacuumRules& rules);
/// <0|0(t)> = e^{i alpha} e^{j beta}.
Bicomplex overlap_with_vacuum(double t, const FieldParams& params, const GeometrySpec& geom,
                              const CommutationTable& table, const VacuumRules& rules);

/// <psi|psi> with the conj_bar bra, minus 1. Sector kets pair with the
/// opposite projector on the bra side, so only the vacuum survives.
double norm_deviation(const StateVector& state);
double norm_preservation(double t, int order, const FieldParams& params, const GeometrySpec& geom,
                         const CommutationTable& table, const VacuumRules& rules);

/// Sector-wise Hilbert norm of the first omitted term X^{n+1}/(n+1)! |0>,
/// bounded by ||X||_1^{n+1} / (n+1)! per ket ordering.
double truncation_remainder(const PairExponent& x, int order);
double exponent_norm(const PairExponent& x);

/// w^3/k - 2i w^2 gamma / k. Throws PoleAtZeroMomentum at k = 0.
Complex eta(double k, const FieldParams& params);

enum class Contraction { printed, derived };

struct AsymptoticOptions {
  Contraction contraction = Contraction::printed;
  /// Derived only: keep the k' = -k root of w_k' = w_k, weighted by I(2k).
  bool reflected_branch = false;
  std::size_t max_kets = kDefaultKetCap;
};

/// Printed: 5 (L2 - L1) dk eta_k W(k, k). Derived: the delta-sequence rule
/// t e^{ist} -> -i delta(s) applied to i conj(H_gamma G), with Jacobian
/// w_k / |k| from delta(w_k' - w_k).
PairExponent finite_asymptotic_exponent(const FieldParams& params, const GeometrySpec& geom,
                                        const Lattice& lattice, const AsymptoticOptions& opts = {});
StateVector asymptotic_state_finite(int order, const FieldParams& params, double L1, double L2,
                                    const CommutationTable& table, const AsymptoticOptions& opts = {});

/// pi t dk (gamma w_k + 5i w_k^2) W(k, k).
PairExponent infinite_asymptotic_exponent(double t, const FieldParams& params, const Lattice& lattice);
StateVector asymptotic_state_infinite_at(double t, int order, const FieldParams& params,
                                         const CommutationTable& table,
                                         std::size_t max_kets = kDefaultKetCap);

struct AsymptoticDiagnostics {
  std::vector<double> t;
  std::vector<double> log_modulus;    // log |exp(sum_k c_k(t))|
  std::vector<double> phase;          // unwrapped arg of the same
  double modulus_growth_rate = 0.0;   // least-squares slope of log_modulus
  double expected_growth_rate = 0.0;  // pi gamma dk sum_k w_k
  double max_mode_drift = 0.0;        // max over k, t of ||exp(c_k(t))| - |exp(c_k(0))||
  bool is_cyclostationary = false;
  bool divergent = false;
};

AsymptoticDiagnostics asymptotic_state_infinite(const std::vector<double>& t_values,
                                                const FieldParams& params, const CommutationTable& table);

enum class Side { plus, minus };

/// Multiplies every amplitude by J+ or J- and drops exact zeros.
StateVector project_view(const StateVector& state, Side side);

struct ModeLabel {
  int superscript = 1;  // 1: system copy, 2: environment copy
  char species = 'a';
  int n = 0;

  friend auto operator<=>(const ModeLabel&, const ModeLabel&) = default;
};

/// Every mode (both copies, both species) at the given momentum indices.
std::set<ModeLabel> momentum_modes(const std::set<int>& momenta);

struct SparseEntry {
  long r = 0;
  long c = 0;
  Complex v;
};

/// Singular values, descending. Above `dense_limit` cells the long side is
/// folded through blocked Householder QR, so only a short x short factor is
/// ever dense.
std::vector<double> sparse_singular_values(long nr, long nc, std::vector<SparseEntry> entries,
                                           long dense_limit = 4'000'000);

/// Rank of the amplitude matrix across the bipartition (part, rest), largest
/// over the two idempotent sectors; singular values above 1e-10 count.
int schmidt_rank(const StateVector& state, const std::set<ModeLabel>& part, double threshold = 1e-10);

}  // namespace hcqft
