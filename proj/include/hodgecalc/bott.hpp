#ifndef HODGECALC_BOTT_HPP
#define HODGECALC_BOTT_HPP

#include <optional>

#include "hodgecalc/bigint.hpp"
#include "hodgecalc/errors.hpp"

namespace hodgecalc {

/// Cohomology query on projective n-space: q-th cohomology of p-forms
/// twisted by the m-th power of the hyperplane bundle.
struct BottQuery {
  int n = 1;  // ambient dimension, >= 1
  int p = 0;  // form degree, in [0, n]
  int m = 0;  // twist, any integer
  int q = 0;  // cohomology degree, in [0, n]
};

/// Closed-form dimension:
///   C(m+n-p, m) * C(m-1, p)      if q = 0 and m > p
///   1                            if m = 0 and q = p
///   C(p-m, -m) * C(-m-1, n-p)    if q = n and m < p - n
///   0                            otherwise
/// with C(a, b) = 0 whenever b < 0 or a < b.
Int bott_h(const BottQuery& query);

/// Independent verification oracle at desk scale (n <= 5, |m| <= 8): chases
/// dimensions through the twisted Euler-sequence chain
///   0 -> p-forms(m) -> O(m-p)^C(n+1,p) -> (p-1)-forms(m) -> 0
/// starting from the line-bundle base cases. Line-bundle cohomology on
/// projective space sits in degrees 0 and n only, which pins every connecting
/// rank: for m >= 0 the chase runs downward from the canonical twist, for
/// m < 0 upward from O(m).
Int bott_oracle(const BottQuery& query);

/// Euler characteristic of twisted p-forms computed purely from the line
/// bundle terms of the Koszul chain; involves no rank resolution at all.
Int bott_euler_characteristic(int n, int p, int m);

struct BottViolation {
  BottQuery query;
  Int value;
};

/// Sweeps 1 <= q <= n, 1 <= m <= bound_m, 0 <= p <= n and reports the first
/// non-vanishing closed-form value, if any.
std::optional<BottViolation> bott_vanishing_check(int n, int bound_m);

}  // namespace hodgecalc

#endif
