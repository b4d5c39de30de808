#ifndef HODGECALC_CONSTRUCTORS_HPP
#define HODGECALC_CONSTRUCTORS_HPP

#include "hodgecalc/grid.hpp"

namespace hodgecalc {

/// 0-dimensional base case: the unit for product and the smallest blow-up center.
HodgeGrid point();

/// Projective n-space: Kronecker-delta diagonal grid.
HodgeGrid projective_space(int n);

/// Smooth proper curve of genus g: (1, g; g, 1) in every characteristic.
HodgeGrid curve(const Int& genus);

/// Kunneth product: bigraded convolution of the two tables.
/// Twisted inputs are refused; the product of twisted pairs is not provided.
HodgeGrid product(const HodgeGrid& a, const HodgeGrid& b);

/// Projectivized rank-c bundle over the base: the grid is the sum of the
/// base grid shifted down the diagonal by i = 0..c-1. Only the rank enters;
/// the bundle itself is never modeled.
HodgeGrid projective_bundle(const HodgeGrid& base, int rank);

/// Blow-up of x along a center z of codimension c >= 2:
///   h[p][q] = x.h[p][q] + sum_{i=1}^{c-1} z.h[p-i][q-i].
///
/// Only the dimension arithmetic (z.dim = x.dim - c >= 0, matching twist
/// tags) is checked; that z really embeds in x with the stated codimension
/// is the caller's assertion. For twisted inputs, z's grid must carry the
/// coefficients restricted from x's.
HodgeGrid blow_up(const HodgeGrid& x, const HodgeGrid& z, int codim);

/// Blow-up applied to Serre-dual pairs componentwise; preserves the pairing.
GridPair blow_up(const GridPair& x, const GridPair& z, int codim);

}  // namespace hodgecalc

#endif
