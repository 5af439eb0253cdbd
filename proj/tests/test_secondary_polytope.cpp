#include <doctest.h>

#include <cmath>

#include "pachner/linear_program.hpp"
#include "pachner/secondary_polytope.hpp"

using namespace pachner;

namespace {

long binom(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

PointConfiguration xy(std::vector<std::pair<int, int>> pts) {
  std::vector<std::pair<Rational, Rational>> v;
  for (auto [x, y] : pts) v.push_back({x, y});
  return make_configuration(v);
}

// Outer triangle with a rotated inner triangle; admits a non-regular triangulation.
PointConfiguration mother() { return xy({{0, 0}, {12, 0}, {6, 12}, {4, 3}, {8, 4}, {6, 8}}); }

}  // namespace

TEST_SUITE("secondary_polytope") {

TEST_CASE("points on a line give cubes") {
  for (int m = 3; m <= 6; ++m) {
    std::vector<Rational> xs;
    for (int i = 0; i < m; ++i) xs.push_back(i * i + 1);
    SecondaryPolytope sp = build_sp(points_on_line(xs));
    CHECK(sp.subdivisions_total == static_cast<long>(std::pow(3, m - 2)));
    std::vector<long> cube;
    for (int i = 0; i <= m - 2; ++i) cube.push_back(binom(m - 2, i) * (1L << (m - 2 - i)));
    CHECK(sp.fvector() == cube);
    CHECK(sp.hull_agrees);
  }
}

TEST_CASE("convex polygons give associahedra") {
  CHECK(build_sp(xy({{0, 0}, {1, 0}, {1, 1}, {0, 1}})).fvector() == std::vector<long>{2, 1});
  CHECK(build_sp(xy({{0, 0}, {2, 0}, {3, 2}, {1, 3}, {-1, 2}})).fvector() == std::vector<long>{5, 5, 1});
  SecondaryPolytope hex = build_sp(xy({{0, 0}, {2, 0}, {4, 1}, {4, 3}, {2, 5}, {-1, 2}}));
  CHECK(hex.fvector() == std::vector<long>{14, 21, 9, 1});
  CHECK(hex.hull_agrees);
}

TEST_CASE("interior points") {
  SecondaryPolytope t1 = build_sp(xy({{0, 0}, {3, 0}, {0, 3}, {1, 1}}));
  CHECK(t1.fvector() == std::vector<long>{2, 1});
  SecondaryPolytope t2 = build_sp(xy({{0, 0}, {6, 0}, {0, 6}, {1, 2}, {3, 1}}));
  CHECK(t2.fvector() == std::vector<long>{5, 5, 1});
  CHECK(t2.subdivisions_total == 11);
  SecondaryPolytope s1 = build_sp(xy({{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 2}}));
  CHECK(s1.fvector() == std::vector<long>{5, 5, 1});
}

TEST_CASE("GKZ vectors of three collinear points") {
  PointConfiguration a = points_on_line({0, 1, 2});
  MarkedSubdivision fine{{{0, 1}, {1, 2}}};
  MarkedSubdivision coarse{{{0, 1, 2}}};
  CHECK(gkz_vector(a, fine) == std::vector<Rational>{1, 2, 1});
  MarkedSubdivision skip{{{0, 2}}};
  CHECK(gkz_vector(a, skip) == std::vector<Rational>{2, 0, 2});
  CHECK(is_triangulation(a, fine));
  CHECK_FALSE(is_triangulation(a, coarse));
  CHECK(refines(fine, coarse));
  CHECK(face_dimension(a, coarse) == 1);
}

TEST_CASE("GKZ of a square triangulation") {
  PointConfiguration a = xy({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  MarkedSubdivision t{{{0, 1, 2}, {0, 2, 3}}};
  // Unit square: each triangle has area 1/2; vertices 0 and 2 lie in both.
  CHECK(gkz_vector(a, t) == std::vector<Rational>{1, Rational(1, 2), 1, Rational(1, 2)});
}

TEST_CASE("heights reproduce their subdivisions") {
  SecondaryPolytope sp = build_sp(xy({{0, 0}, {6, 0}, {0, 6}, {1, 2}, {3, 1}}));
  for (std::size_t f = 0; f < sp.faces.size(); ++f)
    CHECK(subdivision_from_heights(sp.config, sp.heights[f]) == sp.faces[f]);
}

TEST_CASE("a non-regular triangulation exists and both LP methods agree") {
  PointConfiguration a = mother();
  int nonregular = 0;
  for (const auto& s : enumerate_subdivisions(a)) {
    bool fm = is_regular(a, s, LpMethod::FourierMotzkin).regular;
    bool sx = is_regular(a, s, LpMethod::Simplex).regular;
    CHECK(fm == sx);
    if (!fm && is_triangulation(a, s)) ++nonregular;
  }
  CHECK(nonregular == 1);
  SecondaryPolytope sp = build_sp(a);
  CHECK(sp.hull_agrees);
  CHECK(static_cast<long>(sp.vertices.size()) < sp.triangulations_total);
}

TEST_CASE("face incidences square to zero") {
  SecondaryPolytope sp = build_sp(xy({{0, 0}, {2, 0}, {4, 1}, {4, 3}, {2, 5}, {-1, 2}}));
  auto inc = face_incidences(sp);
  for (std::size_t f = 0; f < sp.faces.size(); ++f) {
    std::map<int, int> two_down;
    for (int h : sp.covers[f])
      for (int g : sp.covers[h]) two_down[g] += inc.at({static_cast<int>(f), h}) * inc.at({h, g});
    for (auto [g, s] : two_down) CHECK(s == 0);
  }
}

TEST_CASE("general position is enforced") {
  CHECK_THROWS_AS(check_general_position(xy({{0, 0}, {1, 1}, {2, 2}, {0, 1}})), Error);
  CHECK_THROWS_AS(check_general_position(points_on_line({0, 1, 1})), Error);
}

TEST_CASE("linear programs") {
  // x >= 1, y >= 2, x + y > 4
  std::vector<LinearConstraint> rows = {
      {{1, 0}, 1, LinearConstraint::GE}, {{0, 1}, 2, LinearConstraint::GE}, {{1, 1}, 4, LinearConstraint::GT}};
  CHECK(fm_max_margin(2, rows).feasible);
  CHECK(simplex_max_margin(2, rows).feasible);
  rows.push_back({{-1, -1}, -4, LinearConstraint::GE});
  CHECK_FALSE(fm_max_margin(2, rows).feasible);
  CHECK_FALSE(simplex_max_margin(2, rows).feasible);

  Matrix a(Ring::Q, 1, 2);
  a.set(0, 0, 1);
  a.set(0, 1, 1);
  LpResult r = simplex_standard(a, {3}, {2, 1});
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.value == 6);
}

TEST_CASE("hull vertices") {
  std::vector<std::vector<Rational>> pts = {{0, 0}, {2, 0}, {1, 1}, {0, 2}, {2, 2}};
  CHECK(hull_vertices(pts) == std::vector<int>{0, 1, 3, 4});
}

}
