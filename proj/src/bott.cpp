#include "hodgecalc/bott.hpp"

#include <string>
#include <vector>

namespace hodgecalc {

namespace {

void check_query(const BottQuery& query) {
  if (query.n < 1) throw ArgumentError("ambient dimension must be >= 1");
  if (query.p < 0 || query.p > query.n)
    throw ArgumentError("form degree p = " + std::to_string(query.p) + " outside [0, n]");
  if (query.q < 0 || query.q > query.n)
    throw ArgumentError("cohomology degree q = " + std::to_string(query.q) + " outside [0, n]");
}

// h^q(P^n, O(d)) for q = 0..n: concentrated in q = 0 (d >= 0) and q = n
// (d <= -n-1).
std::vector<Int> line_bundle_cohomology(int n, int d) {
  std::vector<Int> h(n + 1, 0);
  if (d >= 0) h[0] = binomial(n + d, n);
  if (d <= -n - 1) h[n] = binomial(-d - 1, n);
  return h;
}

}  // namespace

Int bott_h(const BottQuery& query) {
  check_query(query);
  const int n = query.n, p = query.p, m = query.m, q = query.q;
  if (q == 0 && m > p) return binomial(m + n - p, m) * binomial(m - 1, p);
  if (m == 0 && q == p) return 1;
  if (q == n && m < p - n) return binomial(p - m, -m) * binomial(-m - 1, n - p);
  return 0;
}

Int bott_oracle(const BottQuery& query) {
  check_query(query);
  const int n = query.n, m = query.m;
  if (n > 5 || m > 8 || m < -8)
    throw RangeError("oracle is restricted to n <= 5 and |m| <= 8");

  if (n == 1) {
    // p-forms on the line are the invertible sheaf of degree m - 2p
    return line_bundle_cohomology(1, m - 2 * query.p)[query.q];
  }

  // table[p][q] filled by induction on p; each step uses the long exact
  // sequence of the Euler chain, split by the two-row concentration of the
  // line-bundle middle term.
  std::vector<std::vector<Int>> table(n + 1);
  if (m >= 0) {
    // downward: middle terms O(m-p-1) with p <= n-1 have no top cohomology
    table[n] = line_bundle_cohomology(n, m - n - 1);
    for (int p = n - 1; p >= 0; --p) {
      const auto& above = table[p + 1];
      const auto middle = line_bundle_cohomology(n, m - p - 1);
      const Int copies = binomial(n + 1, p + 1);
      std::vector<Int> row(n + 1, 0);
      row[0] = copies * middle[0] - above[0] + above[1];
      for (int q = 1; q <= n - 2; ++q) row[q] = above[q + 1];
      row[n - 1] = above[n];
      row[n] = 0;
      table[p] = std::move(row);
    }
  } else {
    // upward: middle terms O(m-p) with p >= 1 have no sections
    table[0] = line_bundle_cohomology(n, m);
    for (int p = 1; p <= n; ++p) {
      const auto& below = table[p - 1];
      const auto middle = line_bundle_cohomology(n, m - p);
      const Int copies = binomial(n + 1, p);
      std::vector<Int> row(n + 1, 0);
      row[0] = 0;
      for (int q = 1; q <= n - 1; ++q) row[q] = below[q - 1];
      row[n] = below[n - 1] + copies * middle[n] - below[n];
      table[p] = std::move(row);
    }
  }
  return table[query.p][query.q];
}

Int bott_euler_characteristic(int n, int p, int m) {
  if (n < 1 || p < 0 || p > n) throw ArgumentError("invalid (n, p) for Euler characteristic");
  Int chi = 0;
  for (int j = 1; j <= n + 1 - p; ++j) {
    const Int term = binomial(n + 1, p + j) * binomial_poly(Int(m) - p - j + n, n);
    chi += (j % 2 == 1) ? term : -term;
  }
  return chi;
}

std::optional<BottViolation> bott_vanishing_check(int n, int bound_m) {
  if (n < 1) throw ArgumentError("ambient dimension must be >= 1");
  if (bound_m < 1) throw ArgumentError("twist bound must be >= 1");
  for (int q = 1; q <= n; ++q)
    for (int m = 1; m <= bound_m; ++m)
      for (int p = 0; p <= n; ++p) {
        BottQuery query{n, p, m, q};
        Int value = bott_h(query);
        if (value != 0) return BottViolation{query, value};
      }
  return std::nullopt;
}

}  // namespace hodgecalc
