#include "hodgecalc/constructors.hpp"

namespace hodgecalc {

HodgeGrid point() {
  HodgeGrid g = HodgeGrid::zeros(0);
  g.h[0][0] = 1;
  return g;
}

HodgeGrid projective_space(int n) {
  if (n < 1) throw ArgumentError("projective_space requires n >= 1");
  HodgeGrid g = HodgeGrid::zeros(n);
  for (int p = 0; p <= n; ++p) g.h[p][p] = 1;
  return g;
}

HodgeGrid curve(const Int& genus) {
  if (genus < 0) throw ArgumentError("curve genus must be non-negative");
  HodgeGrid g = HodgeGrid::zeros(1);
  g.h[0][0] = 1;
  g.h[1][1] = 1;
  g.h[1][0] = genus;
  g.h[0][1] = genus;
  return g;
}

HodgeGrid product(const HodgeGrid& a, const HodgeGrid& b) {
  if (a.twisted || b.twisted)
    throw UnsupportedError("product of twisted grids is not supported");
  const int n = a.dim + b.dim;
  HodgeGrid g = HodgeGrid::zeros(n);
  g.characteristic = a.characteristic;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      Int sum = 0;
      for (int r = 0; r <= a.dim; ++r)
        for (int s = 0; s <= a.dim; ++s)
          sum += a.entry_or_zero(r, s) * b.entry_or_zero(p - r, q - s);
      g.h[p][q] = sum;
    }
  return g;
}

HodgeGrid projective_bundle(const HodgeGrid& base, int rank) {
  if (rank < 1) throw ArgumentError("projective_bundle requires rank >= 1");
  if (base.twisted)
    throw UnsupportedError("projective_bundle over a twisted grid is not supported");
  const int n = base.dim + rank - 1;
  HodgeGrid g = HodgeGrid::zeros(n);
  g.characteristic = base.characteristic;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      Int sum = 0;
      for (int i = 0; i < rank; ++i) sum += base.entry_or_zero(p - i, q - i);
      g.h[p][q] = sum;
    }
  return g;
}

HodgeGrid blow_up(const HodgeGrid& x, const HodgeGrid& z, int codim) {
  if (codim < 2) throw CodimensionError("blow-up center must have codimension >= 2");
  if (z.dim != x.dim - codim)
    throw ArgumentError("center dimension " + std::to_string(z.dim) + " != " +
                        std::to_string(x.dim) + " - " + std::to_string(codim));
  if (x.twisted != z.twisted)
    throw ArgumentError("blow-up inputs must agree on the twist tag");
  HodgeGrid g = x;
  for (int p = 0; p <= g.dim; ++p)
    for (int q = 0; q <= g.dim; ++q)
      for (int i = 1; i < codim; ++i) g.h[p][q] += z.entry_or_zero(p - i, q - i);
  return g;
}

GridPair blow_up(const GridPair& x, const GridPair& z, int codim) {
  return {blow_up(x.forward, z.forward, codim), blow_up(x.backward, z.backward, codim)};
}

}  // namespace hodgecalc
