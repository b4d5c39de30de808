#ifndef HODGECALC_GRID_HPP
#define HODGECALC_GRID_HPP

#include <string>
#include <vector>

#include "hodgecalc/bigint.hpp"
#include "hodgecalc/errors.hpp"

namespace hodgecalc {

/// Bigraded dimension table of a smooth proper n-fold, possibly with locally
/// free coefficients. h[p][q] holds the dimension of the q-th cohomology of
/// twisted p-forms. The table is (n+1)x(n+1); nothing finer than dimensions
/// is represented.
///
/// Values are immutable by convention: every operation in this library takes
/// grids by const reference and returns fresh ones.
struct HodgeGrid {
  int dim = 0;
  // Ground-field characteristic tag: 0 or a prime. Metadata only; it gates
  // derived operations (the strong-HKR reading) and never changes arithmetic.
  long long characteristic = 0;
  // True when the grid carries non-trivial coefficients; relaxes the
  // h[0][0] = 1 and Serre-symmetry invariants.
  bool twisted = false;
  std::vector<std::vector<Int>> h;

  /// (n+1)x(n+1) all-zero table.
  static HodgeGrid zeros(int n);

  /// Bounds-checked entry access.
  const Int& at(int p, int q) const;

  /// Out-of-range indices read as zero (the convention every summation
  /// formula in this library relies on).
  Int entry_or_zero(int p, int q) const;

  bool operator==(const HodgeGrid&) const = default;
};

/// A grid together with the grid of the dual coefficients. Serre duality
/// pairs entry (p,q) of one with (n-p, n-q) of the other.
struct GridPair {
  HodgeGrid forward;
  HodgeGrid backward;
};

struct Violation {
  std::string kind;  // "shape" | "negative-entry" | "normalization" | "serre-symmetry" | "char-tag"
  int p = -1;
  int q = -1;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks every type invariant; violations are reported as data, never thrown.
ValidationReport validate(const HodgeGrid& g);

/// Checks the Serre-pairing invariant of a GridPair.
ValidationReport validate(const GridPair& pair);

/// Sum over the diagonal p + q = l. Degree range [0, 2n].
Int total_hodge(const HodgeGrid& g, int l);

/// Sum over the anti-diagonal p - q = l. Degree range [-n, n].
Int anti_diagonal(const HodgeGrid& g, int l);

/// Sum of all entries.
Int grid_sum(const HodgeGrid& g);

}  // namespace hodgecalc

#endif
