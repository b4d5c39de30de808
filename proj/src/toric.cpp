#include "hodgecalc/toric.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hodgecalc/constructors.hpp"

namespace hodgecalc {

namespace {

long long vector_gcd(const std::vector<long long>& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g;
}

// |det| of the n x n matrix whose rows are the given rays, n <= 3.
long long abs_determinant(const std::vector<const std::vector<long long>*>& rows) {
  const size_t n = rows.size();
  long long det = 1;
  if (n == 1) {
    det = (*rows[0])[0];
  } else if (n == 2) {
    det = (*rows[0])[0] * (*rows[1])[1] - (*rows[0])[1] * (*rows[1])[0];
  } else if (n == 3) {
    const auto& a = *rows[0];
    const auto& b = *rows[1];
    const auto& c = *rows[2];
    det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
          a[2] * (b[0] * c[1] - b[1] * c[0]);
  }
  return det < 0 ? -det : det;
}

std::string cone_to_string(const std::vector<int>& cone) {
  std::string s = "{";
  for (size_t i = 0; i < cone.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(cone[i]);
  }
  return s + "}";
}

// `cone` must be sorted; max cones may arrive in any order
bool is_face_of_some_max_cone(const Fan& f, const std::vector<int>& cone) {
  for (const auto& max_cone : f.max_cones) {
    std::vector<int> sorted = max_cone;
    std::sort(sorted.begin(), sorted.end());
    if (std::includes(sorted.begin(), sorted.end(), cone.begin(), cone.end())) return true;
  }
  return false;
}

}  // namespace

void validate_fan(const Fan& f) {
  if (f.dim < 0 || f.dim > 3)
    throw InvalidFanError("fan dimension " + std::to_string(f.dim) + " unsupported (0..3)");
  const int n = f.dim;

  std::set<std::vector<long long>> seen_rays;
  for (size_t i = 0; i < f.rays.size(); ++i) {
    const auto& ray = f.rays[i];
    if (static_cast<int>(ray.size()) != n)
      throw InvalidFanError("ray " + std::to_string(i) + " has wrong length");
    if (vector_gcd(ray) != 1)
      throw InvalidFanError("ray " + std::to_string(i) + " is not primitive");
    if (!seen_rays.insert(ray).second)
      throw InvalidFanError("ray " + std::to_string(i) + " duplicates another ray");
  }

  if (f.max_cones.empty()) throw InvalidFanError("fan has no maximal cones");
  std::vector<bool> used(f.rays.size(), false);
  std::set<std::vector<int>> seen_cones;
  for (const auto& cone : f.max_cones) {
    if (static_cast<int>(cone.size()) != n)
      throw InvalidFanError("maximal cone " + cone_to_string(cone) + " is not " +
                            std::to_string(n) + "-dimensional");
    std::vector<int> sorted = cone;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw InvalidFanError("maximal cone " + cone_to_string(cone) + " repeats a ray");
    for (int idx : cone) {
      if (idx < 0 || idx >= static_cast<int>(f.rays.size()))
        throw InvalidFanError("maximal cone " + cone_to_string(cone) + " references ray " +
                              std::to_string(idx));
      used[idx] = true;
    }
    if (!seen_cones.insert(sorted).second)
      throw InvalidFanError("maximal cone " + cone_to_string(cone) + " is listed twice");
    std::vector<const std::vector<long long>*> rows;
    for (int idx : sorted) rows.push_back(&f.rays[idx]);
    if (abs_determinant(rows) != 1)
      throw InvalidFanError("maximal cone " + cone_to_string(cone) + " is not unimodular");
  }
  for (size_t i = 0; i < used.size(); ++i)
    if (!used[i]) throw InvalidFanError("ray " + std::to_string(i) + " lies in no maximal cone");

  // completeness: every ridge bounds exactly two maximal cones, and the cone
  // adjacency graph is connected
  if (n >= 1) {
    std::map<std::vector<int>, std::vector<size_t>> ridge_owners;
    for (size_t c = 0; c < f.max_cones.size(); ++c) {
      std::vector<int> sorted = f.max_cones[c];
      std::sort(sorted.begin(), sorted.end());
      for (size_t drop = 0; drop < sorted.size(); ++drop) {
        std::vector<int> ridge;
        for (size_t k = 0; k < sorted.size(); ++k)
          if (k != drop) ridge.push_back(sorted[k]);
        ridge_owners[ridge].push_back(c);
      }
    }
    for (const auto& [ridge, owners] : ridge_owners)
      if (owners.size() != 2)
        throw InvalidFanError("ridge " + cone_to_string(ridge) + " bounds " +
                              std::to_string(owners.size()) + " maximal cones, expected 2");
    std::vector<bool> visited(f.max_cones.size(), false);
    std::map<size_t, std::vector<size_t>> adjacency;
    for (const auto& [ridge, owners] : ridge_owners) {
      adjacency[owners[0]].push_back(owners[1]);
      adjacency[owners[1]].push_back(owners[0]);
    }
    std::deque<size_t> queue{0};
    visited[0] = true;
    while (!queue.empty()) {
      size_t c = queue.front();
      queue.pop_front();
      for (size_t next : adjacency[c])
        if (!visited[next]) {
          visited[next] = true;
          queue.push_back(next);
        }
    }
    for (size_t c = 0; c < visited.size(); ++c)
      if (!visited[c]) throw InvalidFanError("cone adjacency graph is disconnected");
  }
}

std::vector<long long> f_vector(const Fan& f) {
  validate_fan(f);
  std::set<std::vector<int>> faces;
  for (const auto& max_cone : f.max_cones) {
    std::vector<int> sorted = max_cone;
    std::sort(sorted.begin(), sorted.end());
    const size_t n = sorted.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (size_t k = 0; k < n; ++k)
        if (mask & (1u << k)) face.push_back(sorted[k]);
      faces.insert(face);
    }
  }
  std::vector<long long> d(f.dim + 1, 0);
  d[0] = 1;
  for (const auto& face : faces) ++d[face.size()];
  return d;
}

std::vector<std::vector<int>> cones_of_dimension(const Fan& f, int k) {
  if (k < 0 || k > f.dim) throw ArgumentError("cone dimension outside [0, n]");
  std::set<std::vector<int>> faces;
  for (const auto& max_cone : f.max_cones) {
    std::vector<int> sorted = max_cone;
    std::sort(sorted.begin(), sorted.end());
    const size_t n = sorted.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (size_t j = 0; j < n; ++j)
        if (mask & (1u << j)) face.push_back(sorted[j]);
      if (static_cast<int>(face.size()) == k) faces.insert(face);
    }
  }
  if (k == 0) return {{}};
  return {faces.begin(), faces.end()};
}

HodgeGrid hodge_from_fan(const Fan& f) {
  const auto d = f_vector(f);  // validates
  const int n = f.dim;
  HodgeGrid g = HodgeGrid::zeros(n);
  for (int p = 0; p <= n; ++p) {
    Int hp = 0;
    for (int i = p; i <= n; ++i) {
      const Int term = binomial(i, p) * d[n - i];
      hp += ((i - p) % 2 == 0) ? term : -term;
    }
    g.h[p][p] = hp;
  }
  return g;
}

DeRhamDims betti_from_fan(const Fan& f) {
  const HodgeGrid g = hodge_from_fan(f);
  std::vector<Int> b(2 * f.dim + 1, 0);
  for (int p = 0; p <= f.dim; ++p) b[2 * p] = g.h[p][p];
  return make_de_rham(f.dim, std::move(b));
}

Fan stellar_subdivision(const Fan& f, const std::vector<int>& cone) {
  validate_fan(f);
  std::vector<int> sigma = cone;
  std::sort(sigma.begin(), sigma.end());
  if (sigma.size() < 2)
    throw CodimensionError("stellar subdivision needs a cone of dimension >= 2");
  if (std::adjacent_find(sigma.begin(), sigma.end()) != sigma.end())
    throw ArgumentError("cone " + cone_to_string(cone) + " repeats a ray");
  for (int idx : sigma)
    if (idx < 0 || idx >= static_cast<int>(f.rays.size()))
      throw ArgumentError("cone " + cone_to_string(cone) + " references ray " +
                          std::to_string(idx));
  if (!is_face_of_some_max_cone(f, sigma))
    throw ArgumentError("cone " + cone_to_string(cone) + " is not a face of the fan");

  std::vector<long long> new_ray(f.dim, 0);
  for (int idx : sigma)
    for (int k = 0; k < f.dim; ++k) new_ray[k] += f.rays[idx][k];
  const long long g = vector_gcd(new_ray);
  if (g > 1)
    for (auto& coordinate : new_ray) coordinate /= g;

  Fan out;
  out.dim = f.dim;
  out.rays = f.rays;
  out.rays.push_back(new_ray);
  const int new_index = static_cast<int>(out.rays.size()) - 1;

  for (const auto& max_cone : f.max_cones) {
    std::vector<int> sorted = max_cone;
    std::sort(sorted.begin(), sorted.end());
    const bool contains =
        std::includes(sorted.begin(), sorted.end(), sigma.begin(), sigma.end());
    if (!contains) {
      out.max_cones.push_back(sorted);
      continue;
    }
    for (int replaced : sigma) {
      std::vector<int> piece;
      for (int idx : sorted)
        if (idx != replaced) piece.push_back(idx);
      piece.push_back(new_index);
      std::sort(piece.begin(), piece.end());
      out.max_cones.push_back(piece);
    }
  }
  return out;
}

Fan product_fan(const Fan& a, const Fan& b) {
  validate_fan(a);
  validate_fan(b);
  if (a.dim + b.dim > 3)
    throw RangeError("product fan dimension " + std::to_string(a.dim + b.dim) + " exceeds 3");
  Fan out;
  out.dim = a.dim + b.dim;
  for (const auto& ray : a.rays) {
    std::vector<long long> embedded = ray;
    embedded.resize(out.dim, 0);
    out.rays.push_back(embedded);
  }
  for (const auto& ray : b.rays) {
    std::vector<long long> embedded(a.dim, 0);
    embedded.insert(embedded.end(), ray.begin(), ray.end());
    out.rays.push_back(embedded);
  }
  const int offset = static_cast<int>(a.rays.size());
  for (const auto& ca : a.max_cones)
    for (const auto& cb : b.max_cones) {
      std::vector<int> cone = ca;
      for (int idx : cb) cone.push_back(idx + offset);
      std::sort(cone.begin(), cone.end());
      out.max_cones.push_back(cone);
    }
  return out;
}

HodgeGrid stellar_center_grid(const Fan& f, const std::vector<int>& cone) {
  const int k = static_cast<int>(cone.size());
  if (k == f.dim) return point();
  if (f.dim == 3 && k == 2) return curve(0);  // torus-invariant curves here are rational
  throw UnsupportedError("no center grid is defined for a " + std::to_string(k) +
                         "-cone in a " + std::to_string(f.dim) + "-dimensional fan");
}

Fan point_fan() { return Fan{0, {}, {{}}}; }

Fan p1_fan() { return Fan{1, {{1}, {-1}}, {{0}, {1}}}; }

Fan p2_fan() {
  return Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}};
}

Fan p3_fan() {
  return Fan{3,
             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
             {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
}

Fan p1xp1_fan() { return product_fan(p1_fan(), p1_fan()); }

std::string canonical_key(const Fan& f) {
  std::vector<std::pair<std::vector<long long>, int>> order;
  for (size_t i = 0; i < f.rays.size(); ++i) order.emplace_back(f.rays[i], static_cast<int>(i));
  std::sort(order.begin(), order.end());
  std::vector<int> remap(f.rays.size());
  for (size_t rank = 0; rank < order.size(); ++rank) remap[order[rank].second] = static_cast<int>(rank);

  std::vector<std::vector<int>> cones;
  for (const auto& cone : f.max_cones) {
    std::vector<int> mapped;
    for (int idx : cone) mapped.push_back(remap[idx]);
    std::sort(mapped.begin(), mapped.end());
    cones.push_back(mapped);
  }
  std::sort(cones.begin(), cones.end());

  std::ostringstream key;
  key << f.dim << "|";
  for (const auto& [ray, original] : order) {
    for (long long coordinate : ray) key << coordinate << ",";
    key << ";";
  }
  key << "|";
  for (const auto& cone : cones) {
    for (int idx : cone) key << idx << ",";
    key << ";";
  }
  return key.str();
}

SweepResult oracle_equivalence_sweep(const Fan& seed, int depth) {
  if (depth < 0) throw ArgumentError("sweep depth must be non-negative");
  SweepResult result;

  std::set<std::string> visited;
  std::deque<std::pair<Fan, int>> queue;
  queue.emplace_back(seed, 0);
  visited.insert(canonical_key(seed));

  while (!queue.empty()) {
    auto [fan, level] = queue.front();
    queue.pop_front();
    ++result.fans_visited;

    const HodgeGrid grid = hodge_from_fan(fan);
    const DeRhamDims betti = betti_from_fan(fan);
    const auto d = f_vector(fan);

    // Euler count: the diagonal entries sum to the number of maximal cones
    Int diagonal_sum = 0;
    for (int p = 0; p <= fan.dim; ++p) diagonal_sum += grid.h[p][p];
    ++result.checks;
    if (diagonal_sum != d[fan.dim]) {
      result.ok = false;
      if (result.first_failure.empty())
        result.first_failure = "Euler count mismatch on a fan with " +
                               std::to_string(fan.max_cones.size()) + " maximal cones";
      continue;
    }

    std::vector<std::vector<int>> admissible;
    for (int k = 2; k <= fan.dim; ++k)
      for (auto& cone : cones_of_dimension(fan, k)) admissible.push_back(std::move(cone));

    for (const auto& sigma : admissible) {
      const Fan subdivided = stellar_subdivision(fan, sigma);
      const int codim = static_cast<int>(sigma.size());
      const HodgeGrid center = stellar_center_grid(fan, sigma);

      ++result.checks;
      if (hodge_from_fan(subdivided) != blow_up(grid, center, codim)) {
        result.ok = false;
        if (result.first_failure.empty())
          result.first_failure = "Hodge blow-up mismatch at cone " + cone_to_string(sigma);
      }

      const DeRhamDims center_betti =
          codim == fan.dim ? betti_from_fan(point_fan()) : betti_from_fan(p1_fan());
      ++result.checks;
      if (de_rham_blowup(betti, center_betti, codim) != betti_from_fan(subdivided)) {
        result.ok = false;
        if (result.first_failure.empty())
          result.first_failure = "Betti blow-up mismatch at cone " + cone_to_string(sigma);
      }

      if (level < depth) {
        const std::string key = canonical_key(subdivided);
        if (visited.insert(key).second) queue.emplace_back(subdivided, level + 1);
      }
    }
  }
  return result;
}

}  // namespace hodgecalc
