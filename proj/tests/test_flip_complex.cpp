#include <doctest.h>

#include "pachner/flip_complex.hpp"
#include "pachner/surface_builders.hpp"

using namespace pachner;

namespace {

bool crosses(std::pair<int, int> a, std::pair<int, int> b) {
  auto inside = [&](int x) { return a.first < x && x < a.second; };
  if (a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second) return false;
  return inside(b.first) != inside(b.second);
}

// Dissections of a convex n-gon counted by number of diagonals, by brute force over diagonal subsets.
std::vector<long> dissections_by_size(int n) {
  std::vector<std::pair<int, int>> diag;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (!(i == 0 && j == n - 1)) diag.push_back({i, j});
  std::vector<long> count(n - 2, 0);
  const int m = static_cast<int>(diag.size());
  for (long mask = 0; mask < (1L << m); ++mask) {
    bool ok = true;
    int size = 0;
    for (int a = 0; a < m && ok; ++a) {
      if (!(mask >> a & 1)) continue;
      ++size;
      for (int b = a + 1; b < m && ok; ++b)
        if ((mask >> b & 1) && crosses(diag[a], diag[b])) ok = false;
    }
    if (ok) ++count[size];
  }
  return count;
}

}  // namespace

TEST_SUITE("flip_complex") {

TEST_CASE("disk complexes are associahedra") {
  for (int n = 4; n <= 8; ++n) {
    FlipComplex fc = build_flip_complex(fan_triangulate(disk_polygon(n)), {});
    std::vector<long> oracle = dissections_by_size(n);
    std::vector<long> expected;
    for (int d = 0; d <= n - 3; ++d) expected.push_back(oracle[n - 3 - d]);
    CHECK(fc.fvector() == expected);
    CHECK(fc.complete);
  }
}

TEST_CASE("boundary squares to zero") {
  for (Ring r : {Ring::GF2, Ring::Q}) {
    BuildOptions opt;
    opt.ring = r;
    CHECK(boundary_squares_to_zero(build_flip_complex(fan_triangulate(disk_polygon(7)), opt), r));
    CHECK(boundary_squares_to_zero(build_flip_complex(triangle_with_center(), opt), r));
    CHECK(boundary_squares_to_zero(build_flip_complex(strip("RL"), opt), r));
  }
}

TEST_CASE("disk complex is acyclic") {
  FlipComplex fc = build_flip_complex(fan_triangulate(disk_polygon(7)), {});
  Homology h = homology_gf2(fc);
  REQUIRE(h.betti.size() == 5);
  CHECK(h.betti == std::vector<int>{1, 0, 0, 0, 0});
}

TEST_CASE("cell faces of a square and a pentagon") {
  Surface sq = disk_polygon(4);
  auto f = cell_boundary(canonicalize(sq), true);
  REQUIRE(f.size() == 2);
  CHECK(f[0].sign + f[1].sign == 0);
  CHECK(cell_boundary(canonicalize(disk_polygon(5)), false).size() == 5);
}

TEST_CASE("chain boundary over GF2 and Q") {
  for (Ring r : {Ring::GF2, Ring::Q}) {
    Chain c(r);
    c.add(disk_polygon(5), 1);
    CHECK(c.dimension() == 2);
    Chain b = chain_boundary(c);
    CHECK(b.size() == 5);
    CHECK(chain_boundary(b).is_zero());
  }
}

TEST_CASE("cap exceedance throws") {
  BuildOptions opt;
  opt.max_cells = 10;
  CHECK_THROWS_AS(build_flip_complex(fan_triangulate(disk_polygon(7)), opt), CapExceeded);
}

TEST_CASE("max_dim truncates the build") {
  BuildOptions opt;
  opt.max_dim = 1;
  FlipComplex fc = build_flip_complex(fan_triangulate(disk_polygon(6)), opt);
  CHECK(fc.fvector() == std::vector<long>{14, 21});
  CHECK_FALSE(fc.complete);
}

TEST_CASE("boundary solve and coboundary") {
  FlipComplex fc = build_flip_complex(fan_triangulate(disk_polygon(5)), {});
  // Two distinct vertices are homologous in a connected complex.
  auto b = solve_boundary_gf2(fc, 0, {0, 1});
  REQUIRE(b);
  CHECK_FALSE(solve_boundary_gf2(fc, 0, {0}));
  std::vector<Rational> f(fc.fvector()[0], 1);
  auto df = coboundary(fc, 0, f);
  for (const auto& x : df) CHECK(x == 0);
}

TEST_CASE("torus flip graph is connected") {
  FlipComplex fc = build_flip_complex(minimal_torus(), {});
  Homology h = homology_gf2(fc, false);
  CHECK(h.betti.at(0) == 1);
}

}
