#include "hodgecalc/grid.hpp"


namespace hodgecalc {

HodgeGrid HodgeGrid::zeros(int n) {
  if (n < 0) throw ArgumentError("grid dimension must be non-negative");
  HodgeGrid g;
  g.dim = n;
  g.h.assign(n + 1, std::vector<Int>(n + 1, 0));
  return g;
}

const Int& HodgeGrid::at(int p, int q) const {
  if (p < 0 || p > dim || q < 0 || q > dim)
    throw RangeError("grid index (" + std::to_string(p) + "," + std::to_string(q) +
                     ") outside [0," + std::to_string(dim) + "]^2");
  return h[p][q];
}

Int HodgeGrid::entry_or_zero(int p, int q) const {
  if (p < 0 || p > dim || q < 0 || q > dim) return 0;
  if (p >= static_cast<int>(h.size()) || q >= static_cast<int>(h[p].size())) return 0;
  return h[p][q];
}

namespace {

void report(ValidationReport& r, std::string kind, int p, int q, std::string message) {
  r.violations.push_back({std::move(kind), p, q, std::move(message)});
}

}  // namespace

ValidationReport validate(const HodgeGrid& g) {
  ValidationReport r;
  const int n = g.dim;

  if (n < 0) {
    report(r, "shape", -1, -1, "dim is negative");
    return r;
  }
  if (g.characteristic != 0 && !is_prime(g.characteristic))
    report(r, "char-tag", -1, -1,
           "characteristic " + std::to_string(g.characteristic) + " is neither 0 nor a prime");

  if (static_cast<int>(g.h.size()) != n + 1) {
    report(r, "shape", -1, -1,
           "expected " + std::to_string(n + 1) + " rows, found " + std::to_string(g.h.size()));
    return r;  // entry-level checks are meaningless on a misshapen table
  }
  for (int p = 0; p <= n; ++p) {
    if (static_cast<int>(g.h[p].size()) != n + 1) {
      report(r, "shape", p, -1, "row " + std::to_string(p) + " has wrong length");
      return r;
    }
  }

  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      if (g.h[p][q] < 0) report(r, "negative-entry", p, q, "entry is negative");

  if (!g.twisted) {
    if (g.h[0][0] != 1) report(r, "normalization", 0, 0, "h[0][0] must be 1 on an untwisted grid");
    if (g.h[n][n] != 1) report(r, "normalization", n, n, "h[n][n] must be 1 on an untwisted grid");
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q)
        if (g.h[p][q] != g.h[n - p][n - q]) {
          // report each unordered pair once
          if (std::make_pair(p, q) < std::make_pair(n - p, n - q))
            report(r, "serre-symmetry", p, q,
                   "h[" + std::to_string(p) + "][" + std::to_string(q) + "] != h[" +
                       std::to_string(n - p) + "][" + std::to_string(n - q) + "]");
        }
  }
  return r;
}

ValidationReport validate(const GridPair& pair) {
  ValidationReport r;
  const int n = pair.forward.dim;
  if (pair.backward.dim != n) {
    report(r, "shape", -1, -1, "forward and backward grids have different dimensions");
    return r;
  }
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q)
      if (pair.forward.entry_or_zero(p, q) != pair.backward.entry_or_zero(n - p, n - q))
        report(r, "serre-symmetry", p, q, "forward (p,q) entry differs from backward (n-p,n-q)");
  return r;
}

Int total_hodge(const HodgeGrid& g, int l) {
  if (l < 0 || l > 2 * g.dim)
    throw RangeError("total degree " + std::to_string(l) + " outside [0," +
                     std::to_string(2 * g.dim) + "]");
  Int sum = 0;
  for (int p = 0; p <= g.dim; ++p) sum += g.entry_or_zero(p, l - p);
  return sum;
}

Int anti_diagonal(const HodgeGrid& g, int l) {
  if (l < -g.dim || l > g.dim)
    throw RangeError("anti-diagonal degree " + std::to_string(l) + " outside [-" +
                     std::to_string(g.dim) + "," + std::to_string(g.dim) + "]");
  Int sum = 0;
  for (int p = 0; p <= g.dim; ++p) sum += g.entry_or_zero(p, p - l);
  return sum;
}

Int grid_sum(const HodgeGrid& g) {
  Int sum = 0;
  for (const auto& row : g.h)
    for (const auto& entry : row) sum += entry;
  return sum;
}

}  // namespace hodgecalc
