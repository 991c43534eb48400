#pragma once

#include <vector>

namespace hcqft {

/// Discrete momentum grid. Unstaggered sites are n in [-N, N] with k = n dk;
/// staggered sites are n in [-N, N-1] with k = (n + 1/2) dk, which keeps
/// k = 0 off the grid while staying symmetric under k -> -k.
struct Lattice {
  double delta_k = 0.1;
  int N = 32;
  bool staggered = false;

  [[nodiscard]] int min_index() const { return -N; }
  [[nodiscard]] int max_index() const { return staggered ? N - 1 : N; }
  [[nodiscard]] bool contains(int n) const { return n >= min_index() && n <= max_index(); }
  [[nodiscard]] int size() const { return max_index() - min_index() + 1; }

  [[nodiscard]] double momentum(int n) const {
    return staggered ? (n + 0.5) * delta_k : n * delta_k;
  }

  /// Site carrying momentum -k(n).
  [[nodiscard]] int negate(int n) const { return staggered ? -n - 1 : -n; }

  /// Lattice realization of delta(k - k').
  [[nodiscard]] double delta(int n, int np) const { return n == np ? 1.0 / delta_k : 0.0; }

  [[nodiscard]] std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size());
    for (int n = min_index(); n <= max_index(); ++n) out.push_back(n);
    return out;
  }
};

}  // namespace hcqft
