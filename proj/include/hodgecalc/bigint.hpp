#ifndef HODGECALC_BIGINT_HPP
#define HODGECALC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace hodgecalc {

// Exact arbitrary-precision integer. Genus and rank parameters blow past
// machine words under iterated products, so every dimension count is a Int.
using Int = boost::multiprecision::cpp_int;

/// Combinatorial binomial coefficient: C(a, b) = 0 when b < 0 or a < b.
Int binomial(long long a, long long b);

/// Polynomial binomial \binom{t}{k} = t(t-1)...(t-k+1)/k!, defined for any
/// integer t (possibly negative). Used for Euler characteristics of line
/// bundles, where the signed value matters.
Int binomial_poly(const Int& t, int k);

/// Deterministic primality test for the characteristic tag.
bool is_prime(long long n);

}  // namespace hodgecalc

#endif
