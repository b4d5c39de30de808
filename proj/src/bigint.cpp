#include "hodgecalc/bigint.hpp"

namespace hodgecalc {

Int binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  if (b > a - b) b = a - b;
  Int result = 1;
  for (long long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: product of i consecutive integers is divisible by i!
  }
  return result;
}

Int binomial_poly(const Int& t, int k) {
  if (k < 0) return 0;
  Int numerator = 1;
  for (int i = 0; i < k; ++i) numerator *= t - i;
  Int factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  return numerator / factorial;  // exact for integer t
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  // deterministic Miller-Rabin for 64-bit inputs
  auto mulmod = [](unsigned long long x, unsigned long long y, unsigned long long m) {
    return static_cast<unsigned long long>(static_cast<__uint128_t>(x) * y % m);
  };
  auto powmod = [&](unsigned long long base, unsigned long long e, unsigned long long m) {
    unsigned long long r = 1;
    base %= m;
    while (e > 0) {
      if (e & 1) r = mulmod(r, base, m);
      base = mulmod(base, base, m);
      e >>= 1;
    }
    return r;
  };
  const auto m = static_cast<unsigned long long>(n);
  unsigned long long d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                               19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    unsigned long long x = powmod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool witness = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, m);
      if (x == m - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace hodgecalc
