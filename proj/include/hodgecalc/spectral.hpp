#ifndef HODGECALC_SPECTRAL_HPP
#define HODGECALC_SPECTRAL_HPP

#include <vector>

#include "hodgecalc/grid.hpp"

namespace hodgecalc {

/// Algebraic de Rham dimensions b[0..2n] of an n-fold.
struct DeRhamDims {
  int dim = 0;
  std::vector<Int> b;  // length 2n+1

  bool operator==(const DeRhamDims&) const = default;
};

/// Hochschild homology dimensions indexed l = -n..n, stored at offset l+n.
struct HochschildDims {
  int dim = 0;
  std::vector<Int> hh;  // length 2n+1, entry for degree l at hh[l + dim]

  /// Degree-indexed read; degrees beyond [-n, n] read as zero.
  Int at(int l) const;

  bool operator==(const HochschildDims&) const = default;
};

/// Per-degree gap between a spectral-sequence upper bound and the actual
/// limit dimension. All-zero means degeneracy for the supplied data.
enum class DefectKind { E1, E2 };

struct DefectVector {
  int dim = 0;
  DefectKind kind = DefectKind::E1;
  std::vector<Int> d;  // length 2n+1

  /// Lowest degree carried: 0 for E1 vectors, -n for E2 vectors.
  int min_degree() const { return kind == DefectKind::E1 ? 0 : -dim; }

  /// Degree-indexed read; degrees outside the carried range read as zero.
  Int at(int l) const;

  bool is_zero() const;

  bool operator==(const DefectVector&) const = default;
};

/// Checked constructors; these types are otherwise plain data.
DeRhamDims make_de_rham(int dim, std::vector<Int> b);
HochschildDims make_hochschild(int dim, std::vector<Int> hh);
DefectVector make_defect(int dim, DefectKind kind, std::vector<Int> d);

/// Blow-up additivity of de Rham dimensions:
///   b[l] = bx.b[l] + sum_{i=1}^{c-1} bz.b[l-2i].
DeRhamDims de_rham_blowup(const DeRhamDims& bx, const DeRhamDims& bz, int codim);

/// Same arithmetic for twisted coefficients. Whether the formula holds with
/// twists in positive characteristic is an open question; the caller must
/// opt in explicitly, otherwise the operation refuses.
DeRhamDims de_rham_blowup_twisted(const DeRhamDims& bx, const DeRhamDims& bz, int codim,
                                  bool assuming_q59);

/// E1 defect: d[l] = total_hodge(g, l) - b[l]. A negative entry means the
/// de Rham dimension exceeds its upper bound, which genuine data cannot do.
DefectVector e1_defect(const HodgeGrid& g, const DeRhamDims& b);

/// Blow-up transport of E1 defects: d[l] = dx.d[l] + sum_{i=1}^{c-1} dz.d[l-2i].
/// Vanishes iff both inputs vanish.
DefectVector e1_defect_blowup(const DefectVector& dx, const DefectVector& dz, int codim);

/// Blow-up additivity of Hochschild dimensions: hh[l] = hx.hh[l] + (c-1) * hz.hh[l].
HochschildDims hh_blowup(const HochschildDims& hx, const HochschildDims& hz, int codim);

/// Projective-bundle additivity: output dim = hx.dim + c - 1, hh[l] = c * hx.hh[l].
HochschildDims hh_projbundle(const HochschildDims& hx, int rank);

/// Reads Hochschild dimensions off the grid's anti-diagonals. Licensed only
/// when the characteristic tag is 0 or at least the dimension (the strong
/// HKR window); otherwise refuses with a hypothesis error rather than
/// silently returning the upper bound.
HochschildDims hh_from_grid(const HodgeGrid& g);

/// E2 defect: d[l] = anti_diagonal(g, l) - hh[l].
DefectVector e2_defect(const HodgeGrid& g, const HochschildDims& hh);

/// Blow-up transport of E2 defects: d[l] = dx.d[l] + (c-1) * dz.d[l].
DefectVector e2_defect_blowup(const DefectVector& dx, const DefectVector& dz, int codim);

/// Degree-wise equality of total Hodge dimensions across a family of twisted
/// grids indexed by exponents coprime to m. grids[j] carries the j-th tensor
/// power's table; exponent 1 must be present and is the reference. Returns
/// one flag per degree l = 0..2n.
std::vector<bool> eo_check(const std::vector<HodgeGrid>& grids, long long m,
                           const std::vector<long long>& exponents);

}  // namespace hodgecalc

#endif
