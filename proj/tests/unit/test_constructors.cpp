#include <doctest.h>

#include <map>

#include "hodgecalc/constructors.hpp"
#include "hodgecalc/toric.hpp"
#include "testutil.hpp"

using namespace hodgecalc;

namespace {

// Independent convolution oracle: multiplies the tables as bivariate
// polynomials over a sparse exponent map instead of iterating the matrices.
HodgeGrid polynomial_product(const HodgeGrid& a, const HodgeGrid& b) {
  std::map<std::pair<int, int>, Int> terms;
  for (int p = 0; p <= a.dim; ++p)
    for (int q = 0; q <= a.dim; ++q)
      if (a.h[p][q] != 0)
        for (int r = 0; r <= b.dim; ++r)
          for (int s = 0; s <= b.dim; ++s)
            if (b.h[r][s] != 0) terms[{p + r, q + s}] += a.h[p][q] * b.h[r][s];
  HodgeGrid g = HodgeGrid::zeros(a.dim + b.dim);
  for (const auto& [exponents, coefficient] : terms)
    g.h[exponents.first][exponents.second] = coefficient;
  return g;
}

}  // namespace

TEST_CASE("point grid and unit law") {
  CHECK(point().dim == 0);
  CHECK(point().h[0][0] == 1);
  CHECK(product(point(), point()) == point());
  CHECK(product(curve(3), point()) == curve(3));
}

TEST_CASE("projective space is the delta diagonal") {
  const HodgeGrid p2 = projective_space(2);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) CHECK(p2.h[p][q] == (p == q ? 1 : 0));
  CHECK(projective_space(3).h[3][3] == 1);
  CHECK_THROWS_AS(projective_space(0), ArgumentError);
  CHECK(projective_space(2) == projective_bundle(point(), 3));
}

TEST_CASE("curves carry (1, g; g, 1)") {
  CHECK(curve(0) == projective_space(1));
  const HodgeGrid g2 = curve(2);
  CHECK(g2.h[1][0] == 2);
  CHECK(g2.h[0][1] == 2);
  for (int genus : {0, 1, 5, 100}) CHECK(validate(curve(genus)).ok());
  CHECK_THROWS_AS(curve(-1), ArgumentError);
}

TEST_CASE("quadric surface from product and from the toric oracle") {
  const HodgeGrid g = product(projective_space(1), projective_space(1));
  CHECK(g.dim == 2);
  CHECK(g.h[1][1] == 2);
  CHECK(g.h[0][0] == 1);
  CHECK(g.h[2][2] == 1);
  CHECK(total_hodge(g, 1) == 0);
  CHECK(g == hodge_from_fan(p1xp1_fan()));
}

TEST_CASE("product of two elliptic curves, against the polynomial oracle") {
  const HodgeGrid g = product(curve(1), curve(1));
  CHECK(g.h[1][0] == 2);
  CHECK(g.h[0][1] == 2);
  CHECK(g.h[1][1] == 4);
  CHECK(g.h[2][0] == 1);
  CHECK(g.h[0][2] == 1);
  CHECK(g.h[2][1] == 2);
  CHECK(g.h[1][2] == 2);
  CHECK(g == polynomial_product(curve(1), curve(1)));
}

TEST_CASE("product agrees with the polynomial oracle on random grids") {
  testutil::Rng rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const HodgeGrid a = testutil::random_valid_grid(rng, testutil::uniform(rng, 0, 3));
    const HodgeGrid b = testutil::random_valid_grid(rng, testutil::uniform(rng, 0, 3));
    CHECK(product(a, b) == polynomial_product(a, b));
  }
}

TEST_CASE("product is commutative and associative") {
  testutil::Rng rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const HodgeGrid a = testutil::random_valid_grid(rng, testutil::uniform(rng, 0, 2));
    const HodgeGrid b = testutil::random_valid_grid(rng, testutil::uniform(rng, 0, 2));
    const HodgeGrid c = testutil::random_valid_grid(rng, testutil::uniform(rng, 0, 2));
    CHECK(product(a, b) == product(b, a));
    CHECK(product(product(a, b), c) == product(a, product(b, c)));
  }
}

TEST_CASE("product refuses twisted inputs") {
  HodgeGrid twisted = HodgeGrid::zeros(1);
  twisted.twisted = true;
  CHECK_THROWS_AS(product(twisted, curve(0)), UnsupportedError);
  CHECK_THROWS_AS(projective_bundle(twisted, 2), UnsupportedError);
}

TEST_CASE("projective bundle over a curve") {
  CHECK(projective_bundle(curve(0), 2) == product(projective_space(1), projective_space(1)));

  const HodgeGrid ruled = projective_bundle(curve(3), 2);
  CHECK(ruled.h[0][0] == 1);
  CHECK(ruled.h[2][2] == 1);
  CHECK(ruled.h[1][0] == 3);
  CHECK(ruled.h[0][1] == 3);
  CHECK(ruled.h[2][1] == 3);
  CHECK(ruled.h[1][2] == 3);
  CHECK(ruled.h[1][1] == 2);
  CHECK(validate(ruled).ok());
  CHECK_THROWS_AS(projective_bundle(curve(3), 0), ArgumentError);
}

TEST_CASE("surface blown up at a point gains one (1,1) class") {
  const HodgeGrid g = blow_up(projective_space(2), point(), 2);
  CHECK(g.h[1][1] == 2);
  HodgeGrid expected = projective_space(2);
  expected.h[1][1] = 2;
  CHECK(g == expected);
}

TEST_CASE("threefold blown up along a rational curve") {
  const HodgeGrid g = blow_up(projective_space(3), curve(0), 2);
  CHECK(g.h[1][1] == 2);
  CHECK(g.h[2][2] == 2);
  CHECK(g.h[0][0] == 1);
  CHECK(g.h[3][3] == 1);
  CHECK(grid_sum(g) == 6);
}

TEST_CASE("point blow-up in full codimension raises the inner diagonal") {
  testutil::Rng rng(5);
  for (int n : {2, 3, 4, 5}) {
    const HodgeGrid x = testutil::random_valid_grid(rng, n);
    const HodgeGrid g = blow_up(x, point(), n);
    for (int i = 1; i <= n - 1; ++i) CHECK(g.h[i][i] == x.h[i][i] + 1);
    for (int q = 0; q <= n; ++q) {
      CHECK(g.h[0][q] == x.h[0][q]);
      CHECK(g.h[n][q] == x.h[n][q]);
      CHECK(g.h[q][0] == x.h[q][0]);
      CHECK(g.h[q][n] == x.h[q][n]);
    }
  }
}

TEST_CASE("blow-up argument checking") {
  CHECK_THROWS_AS(blow_up(projective_space(2), point(), 1), CodimensionError);
  CHECK_THROWS_AS(blow_up(projective_space(2), curve(0), 2), ArgumentError);
  HodgeGrid twisted_center = HodgeGrid::zeros(0);
  twisted_center.twisted = true;
  CHECK_THROWS_AS(blow_up(projective_space(2), twisted_center, 2), ArgumentError);
}

TEST_CASE("blow-ups at disjoint centers commute") {
  testutil::Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = testutil::uniform(rng, 3, 5);
    const HodgeGrid x = testutil::random_valid_grid(rng, n);
    const HodgeGrid z = testutil::random_valid_grid(rng, n - 2);
    const HodgeGrid point_first = blow_up(blow_up(x, point(), n), z, 2);
    const HodgeGrid center_first = blow_up(blow_up(x, z, 2), point(), n);
    CHECK(point_first == center_first);
  }
}

TEST_CASE("constructor outputs stay valid") {
  testutil::Rng rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const HodgeGrid a = testutil::random_valid_grid(rng, testutil::uniform(rng, 0, 3));
    const HodgeGrid b = testutil::random_valid_grid(rng, testutil::uniform(rng, 0, 3));
    CHECK(validate(product(a, b)).ok());
    CHECK(validate(projective_bundle(a, testutil::uniform(rng, 1, 3))).ok());
    if (a.dim >= 2) {
      const int c = testutil::uniform(rng, 2, a.dim);
      const HodgeGrid z = testutil::random_valid_grid(rng, a.dim - c);
      CHECK(validate(blow_up(a, z, c)).ok());
    }
  }
}

TEST_CASE("total Hodge additivity under blow-up") {
  testutil::Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = testutil::uniform(rng, 2, 5);
    const int c = testutil::uniform(rng, 2, n);
    const HodgeGrid x = testutil::random_valid_grid(rng, n);
    const HodgeGrid z = testutil::random_valid_grid(rng, n - c);
    const HodgeGrid g = blow_up(x, z, c);
    for (int l = 0; l <= 2 * n; ++l) {
      Int expected = total_hodge(x, l);
      for (int i = 1; i < c; ++i) {
        const int k = l - 2 * i;
        if (k >= 0 && k <= 2 * z.dim) expected += total_hodge(z, k);
      }
      CHECK(total_hodge(g, l) == expected);
    }
  }
}

TEST_CASE("blow-up of a Serre-dual pair stays Serre-dual") {
  testutil::Rng rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testutil::uniform(rng, 2, 5);
    const int c = testutil::uniform(rng, 2, n);
    // build a twisted pair: forward random, backward the mirrored table
    HodgeGrid forward = HodgeGrid::zeros(n);
    forward.twisted = true;
    HodgeGrid backward = HodgeGrid::zeros(n);
    backward.twisted = true;
    for (int p = 0; p <= n; ++p)
      for (int q = 0; q <= n; ++q) {
        forward.h[p][q] = testutil::uniform(rng, 0, 4);
        backward.h[n - p][n - q] = forward.h[p][q];
      }
    HodgeGrid zf = HodgeGrid::zeros(n - c);
    zf.twisted = true;
    HodgeGrid zb = HodgeGrid::zeros(n - c);
    zb.twisted = true;
    for (int p = 0; p <= n - c; ++p)
      for (int q = 0; q <= n - c; ++q) {
        zf.h[p][q] = testutil::uniform(rng, 0, 4);
        zb.h[n - c - p][n - c - q] = zf.h[p][q];
      }
    const GridPair result = blow_up(GridPair{forward, backward}, GridPair{zf, zb}, c);
    CHECK(validate(result).ok());
  }
}

TEST_CASE("entries overflow machine words without losing exactness") {
  const Int genus = Int("1000000000000000000000");  // 10^21
  HodgeGrid g = product(curve(genus), curve(genus));
  CHECK(g.h[1][1] == genus * genus * 2 + 2);
  CHECK(g.h[1][0] == 2 * genus);
}
