#ifndef HODGECALC_TORIC_HPP
#define HODGECALC_TORIC_HPP

#include <string>
#include <vector>

#include "hodgecalc/grid.hpp"
#include "hodgecalc/spectral.hpp"

namespace hodgecalc {

/// Smooth complete simplicial fan in a lattice of rank <= 3, given by its
/// primitive ray generators and the ray-index sets of its maximal cones.
/// Serves as a combinatorial oracle that is independent of every grid
/// formula it is used to verify.
struct Fan {
  int dim = 0;
  std::vector<std::vector<long long>> rays;
  std::vector<std::vector<int>> max_cones;  // each sorted, |cone| = dim

  bool operator==(const Fan&) const = default;
};

/// Checks primitivity, unimodularity, the ridge-pairing completeness
/// criterion and cone-graph connectivity; throws InvalidFanError on the
/// first violation. Sound for every fan reachable from the seed fans by
/// stellar subdivisions; arbitrary user fans are accepted under the same
/// criterion with that caveat.
void validate_fan(const Fan& f);

/// Cone counts (d_0, ..., d_n); d_0 = 1 counts the origin.
std::vector<long long> f_vector(const Fan& f);

/// All k-dimensional cones, as sorted ray-index sets.
std::vector<std::vector<int>> cones_of_dimension(const Fan& f, int k);

/// Hodge grid of the toric variety: concentrated on the diagonal with
/// h[p][p] = sum_{i=p}^{n} (-1)^(i-p) C(i,p) d_{n-i}, in any characteristic.
HodgeGrid hodge_from_fan(const Fan& f);

/// Even Betti numbers b[2p] = h_p, odd ones zero.
DeRhamDims betti_from_fan(const Fan& f);

/// Star subdivision at a face of dimension >= 2: inserts the primitive sum
/// of the face's rays as a new ray and splits every maximal cone containing
/// the face. Models blowing up the torus-invariant subvariety of that face.
Fan stellar_subdivision(const Fan& f, const std::vector<int>& cone);

/// Fan of the product variety (rays embedded in the direct-sum lattice,
/// maximal cones are pairwise unions). Total dimension capped at 3.
Fan product_fan(const Fan& a, const Fan& b);

/// Grid of the torus-invariant center blown up by subdividing a cone of the
/// given size: a point for full-dimensional cones, a rational curve for
/// 2-cones in a 3-dimensional fan.
HodgeGrid stellar_center_grid(const Fan& f, const std::vector<int>& cone);

// Seed fans.
Fan point_fan();
Fan p1_fan();
Fan p2_fan();
Fan p3_fan();
Fan p1xp1_fan();

/// Stable identity of a fan under ray reordering; used to deduplicate
/// breadth-first sweeps over subdivision corpora.
std::string canonical_key(const Fan& f);

struct SweepResult {
  long long fans_visited = 0;
  long long checks = 0;
  bool ok = true;
  std::string first_failure;
};

/// Breadth-first sweep from a seed: every fan reachable by at most `depth`
/// stellar subdivisions (of any admissible cone) is checked against the grid
/// and de Rham blow-up formulas, plus the Euler count of its own table.
SweepResult oracle_equivalence_sweep(const Fan& seed, int depth);

}  // namespace hodgecalc

#endif
