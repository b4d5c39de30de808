#include "hodgecalc/spectral.hpp"

#include <numeric>
#include <string>

namespace hodgecalc {

namespace {

void check_length(int dim, size_t got, const char* what) {
  if (dim < 0) throw ArgumentError(std::string(what) + ": dimension must be non-negative");
  const size_t want = 2 * static_cast<size_t>(dim) + 1;
  if (got != want)
    throw ArgumentError(std::string(what) + ": expected " + std::to_string(want) +
                        " entries, got " + std::to_string(got));
}

}  // namespace

Int HochschildDims::at(int l) const {
  if (l < -dim || l > dim) return 0;
  return hh[l + dim];
}

Int DefectVector::at(int l) const {
  const int lo = min_degree();
  if (l < lo || l > lo + 2 * dim) return 0;
  return d[l - lo];
}

bool DefectVector::is_zero() const {
  for (const auto& entry : d)
    if (entry != 0) return false;
  return true;
}

DeRhamDims make_de_rham(int dim, std::vector<Int> b) {
  check_length(dim, b.size(), "de Rham dimensions");
  if (b[0] < 1) throw ArgumentError("de Rham dimensions require b[0] >= 1");
  for (const auto& entry : b)
    if (entry < 0) throw ArgumentError("de Rham dimensions must be non-negative");
  return DeRhamDims{dim, std::move(b)};
}

HochschildDims make_hochschild(int dim, std::vector<Int> hh) {
  check_length(dim, hh.size(), "Hochschild dimensions");
  for (const auto& entry : hh)
    if (entry < 0) throw ArgumentError("Hochschild dimensions must be non-negative");
  return HochschildDims{dim, std::move(hh)};
}

DefectVector make_defect(int dim, DefectKind kind, std::vector<Int> d) {
  check_length(dim, d.size(), "defect vector");
  for (const auto& entry : d)
    if (entry < 0)
      throw InconsistencyError("defect entries must be non-negative; negative values signal "
                               "inconsistent input data");
  return DefectVector{dim, kind, std::move(d)};
}

DeRhamDims de_rham_blowup(const DeRhamDims& bx, const DeRhamDims& bz, int codim) {
  check_length(bx.dim, bx.b.size(), "de Rham dimensions");
  check_length(bz.dim, bz.b.size(), "de Rham dimensions");
  if (codim < 2) throw CodimensionError("blow-up center must have codimension >= 2");
  if (bz.dim != bx.dim - codim)
    throw ArgumentError("center dimension " + std::to_string(bz.dim) + " != " +
                        std::to_string(bx.dim) + " - " + std::to_string(codim));
  std::vector<Int> b = bx.b;
  for (int l = 0; l <= 2 * bx.dim; ++l)
    for (int i = 1; i < codim; ++i) {
      const int k = l - 2 * i;
      if (k >= 0 && k <= 2 * bz.dim) b[l] += bz.b[k];
    }
  return DeRhamDims{bx.dim, std::move(b)};
}

DeRhamDims de_rham_blowup_twisted(const DeRhamDims& bx, const DeRhamDims& bz, int codim,
                                  bool assuming_q59) {
  if (!assuming_q59)
    throw HypothesisError(
        "the twisted de Rham blow-up formula is an open question; pass assuming_q59 to "
        "compute under that hypothesis");
  return de_rham_blowup(bx, bz, codim);
}

DefectVector e1_defect(const HodgeGrid& g, const DeRhamDims& b) {
  if (g.dim != b.dim) throw ArgumentError("grid and de Rham dimensions disagree");
  check_length(b.dim, b.b.size(), "de Rham dimensions");
  std::vector<Int> d(2 * g.dim + 1);
  for (int l = 0; l <= 2 * g.dim; ++l) {
    d[l] = total_hodge(g, l) - b.b[l];
    if (d[l] < 0)
      throw InconsistencyError("de Rham dimension in degree " + std::to_string(l) +
                               " exceeds its E1 upper bound");
  }
  return DefectVector{g.dim, DefectKind::E1, std::move(d)};
}

DefectVector e1_defect_blowup(const DefectVector& dx, const DefectVector& dz, int codim) {
  check_length(dx.dim, dx.d.size(), "defect vector");
  check_length(dz.dim, dz.d.size(), "defect vector");
  if (dx.kind != DefectKind::E1 || dz.kind != DefectKind::E1)
    throw ArgumentError("e1_defect_blowup requires E1 defect vectors");
  if (codim < 2) throw CodimensionError("blow-up center must have codimension >= 2");
  if (dz.dim != dx.dim - codim)
    throw ArgumentError("center dimension " + std::to_string(dz.dim) + " != " +
                        std::to_string(dx.dim) + " - " + std::to_string(codim));
  std::vector<Int> d = dx.d;
  for (int l = 0; l <= 2 * dx.dim; ++l)
    for (int i = 1; i < codim; ++i) d[l] += dz.at(l - 2 * i);
  return DefectVector{dx.dim, DefectKind::E1, std::move(d)};
}

HochschildDims hh_blowup(const HochschildDims& hx, const HochschildDims& hz, int codim) {
  check_length(hx.dim, hx.hh.size(), "Hochschild dimensions");
  check_length(hz.dim, hz.hh.size(), "Hochschild dimensions");
  if (codim < 2) throw CodimensionError("blow-up center must have codimension >= 2");
  if (hz.dim != hx.dim - codim)
    throw ArgumentError("center dimension " + std::to_string(hz.dim) + " != " +
                        std::to_string(hx.dim) + " - " + std::to_string(codim));
  std::vector<Int> hh(2 * hx.dim + 1);
  for (int l = -hx.dim; l <= hx.dim; ++l) hh[l + hx.dim] = hx.at(l) + (codim - 1) * hz.at(l);
  return HochschildDims{hx.dim, std::move(hh)};
}

HochschildDims hh_projbundle(const HochschildDims& hx, int rank) {
  check_length(hx.dim, hx.hh.size(), "Hochschild dimensions");
  if (rank < 1) throw ArgumentError("hh_projbundle requires rank >= 1");
  const int n = hx.dim + rank - 1;
  std::vector<Int> hh(2 * n + 1);
  for (int l = -n; l <= n; ++l) hh[l + n] = rank * hx.at(l);
  return HochschildDims{n, std::move(hh)};
}

HochschildDims hh_from_grid(const HodgeGrid& g) {
  if (g.twisted) throw ArgumentError("hh_from_grid requires an untwisted grid");
  if (g.characteristic != 0 && g.characteristic < g.dim)
    throw HypothesisError("strong HKR requires characteristic 0 or >= " +
                          std::to_string(g.dim) + ", got " +
                          std::to_string(g.characteristic));
  std::vector<Int> hh(2 * g.dim + 1);
  for (int l = -g.dim; l <= g.dim; ++l) hh[l + g.dim] = anti_diagonal(g, l);
  return HochschildDims{g.dim, std::move(hh)};
}

DefectVector e2_defect(const HodgeGrid& g, const HochschildDims& hh) {
  if (g.dim != hh.dim) throw ArgumentError("grid and Hochschild dimensions disagree");
  check_length(hh.dim, hh.hh.size(), "Hochschild dimensions");
  std::vector<Int> d(2 * g.dim + 1);
  for (int l = -g.dim; l <= g.dim; ++l) {
    d[l + g.dim] = anti_diagonal(g, l) - hh.at(l);
    if (d[l + g.dim] < 0)
      throw InconsistencyError("Hochschild dimension in degree " + std::to_string(l) +
                               " exceeds its E2 upper bound");
  }
  return DefectVector{g.dim, DefectKind::E2, std::move(d)};
}

DefectVector e2_defect_blowup(const DefectVector& dx, const DefectVector& dz, int codim) {
  check_length(dx.dim, dx.d.size(), "defect vector");
  check_length(dz.dim, dz.d.size(), "defect vector");
  if (dx.kind != DefectKind::E2 || dz.kind != DefectKind::E2)
    throw ArgumentError("e2_defect_blowup requires E2 defect vectors");
  if (codim < 2) throw CodimensionError("blow-up center must have codimension >= 2");
  if (dz.dim != dx.dim - codim)
    throw ArgumentError("center dimension " + std::to_string(dz.dim) + " != " +
                        std::to_string(dx.dim) + " - " + std::to_string(codim));
  std::vector<Int> d(2 * dx.dim + 1);
  for (int l = -dx.dim; l <= dx.dim; ++l)
    d[l + dx.dim] = dx.at(l) + (codim - 1) * dz.at(l);
  return DefectVector{dx.dim, DefectKind::E2, std::move(d)};
}

std::vector<bool> eo_check(const std::vector<HodgeGrid>& grids, long long m,
                           const std::vector<long long>& exponents) {
  if (grids.size() != exponents.size())
    throw ArgumentError("eo_check needs one grid per exponent");
  if (grids.empty()) throw ArgumentError("eo_check needs at least the exponent-1 grid");
  if (m < 1) throw ArgumentError("the order m must be positive");

  const int n = grids.front().dim;
  long long reference = -1;
  for (size_t j = 0; j < exponents.size(); ++j) {
    if (grids[j].dim != n) throw ArgumentError("all grids must share one dimension");
    if (std::gcd(exponents[j], m) != 1)
      throw ArgumentError("exponent " + std::to_string(exponents[j]) +
                          " is not coprime to m = " + std::to_string(m));
    if (exponents[j] == 1) reference = static_cast<long long>(j);
  }
  if (reference < 0) throw ArgumentError("exponent 1 must be among the supplied exponents");

  std::vector<bool> equal(2 * n + 1, true);
  for (int l = 0; l <= 2 * n; ++l) {
    const Int want = total_hodge(grids[static_cast<size_t>(reference)], l);
    for (const auto& g : grids)
      if (total_hodge(g, l) != want) {
        equal[l] = false;
        break;
      }
  }
  return equal;
}

}  // namespace hodgecalc
