#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pachner/surface.hpp"
#include "pachner/surface_builders.hpp"

using namespace pachner;

namespace {

std::vector<int> shuffled(int n, std::mt19937& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

int first_interior(const Surface& s) {
  for (int d = 0; d < s.darts(); ++d)
    if (s.is_interior(d)) return d;
  return -1;
}

}  // namespace

TEST_SUITE("surfaces") {

TEST_CASE("builtin surfaces validate with the expected topology") {
  for (int n = 3; n <= 8; ++n) {
    Surface d = disk_polygon(n);
    SurfaceReport r = d.validate();
    CHECK(r.ok);
    CHECK(r.chi == 1);
    CHECK(d.faces().size() == 1);
    CHECK(d.cell_dimension() == n - 3);
    CHECK(fan_triangulate(d).is_triangulation());
    CHECK(fan_triangulate(d).faces().size() == static_cast<std::size_t>(n - 2));
  }
  CHECK(minimal_torus().validate().genus == 1);
  CHECK(minimal_torus().vertex_count() == 1);
  CHECK(genus_two_glued().validate().genus == 2);
  CHECK(closed_polygon_surface(3).euler_characteristic() == -4);
  Surface tc = triangle_with_center();
  CHECK(tc.validate().ok);
  CHECK(tc.faces().size() == 3);
  CHECK(tc.vertex_count() == 4);
}

TEST_CASE("strips and stacks are cylinders") {
  Surface a = strip("RSL");
  CHECK(a.validate().ok);
  CHECK(a.euler_characteristic() == 0);
  CHECK(a.circles.size() == 2);
  CHECK(a.faces().size() == 5);
  Surface b = stack(a, strip("LLR"));
  CHECK(b.validate().ok);
  CHECK(b.euler_characteristic() == 0);
  CHECK(b.faces().size() == 11);
  CHECK(canonical_code(shift_T(a, 3)) == canonical_code(a));
  CHECK(canonical_code(shift_T(a, 1)) != canonical_code(a));
  CHECK(canonical_code(shift_T(shift_T(a, 1), 2)) == canonical_code(a));
}

TEST_CASE("canonical code is invariant under renumbering") {
  std::mt19937 rng(3);
  for (const Surface& s : {fan_triangulate(disk_polygon(7)), strip("RLS"), minimal_torus(), genus_two_glued()}) {
    const CanonicalCode c = canonical_code(s);
    for (int t = 0; t < 10; ++t) CHECK(canonical_code(renumbered(s, shuffled(s.darts(), rng))) == c);
    CHECK(canonical_code(canonicalize(s)) == c);
  }
}

TEST_CASE("canonical code separates labels and base darts") {
  Surface a = fan_triangulate(disk_polygon(5));
  CHECK(canonical_code(relabel_T(a, 0, 1)) != canonical_code(a));
  // relabel_T also moves the base dart; a rotation of the bare polygon undoes both.
  CHECK(canonical_code(relabel_T(disk_polygon(5), 0, 1)) == canonical_code(disk_polygon(5)));
  CHECK(canonical_code(relabel_T(a, 0, 5)) == canonical_code(a));
  CHECK(canonical_code(rename_labels(a, {{"p0", "q"}})) != canonical_code(a));
}

TEST_CASE("flip is an involution up to isomorphism") {
  for (const Surface& s : {fan_triangulate(disk_polygon(6)), minimal_torus(), strip("RR")}) {
    const int d = first_interior(s);
    REQUIRE(d >= 0);
    Surface t = flip(s, d);
    CHECK(t.validate().ok);
    CHECK(t.is_triangulation());
    Surface back = flip(t, t.darts() - 2);
    CHECK(canonical_code(back) == canonical_code(s));
  }
}

TEST_CASE("split and erase are inverse") {
  Surface d = disk_polygon(6);
  Surface s = split_face(d, d.faces()[0][0], 0, 3);
  CHECK(s.faces().size() == 2);
  CHECK(s.face_profile() == std::vector<int>{4, 4});
  CHECK(erasable(s, s.darts() - 2));
  CHECK(canonical_code(erase_edge(s, s.darts() - 2)) == canonical_code(d));
}

TEST_CASE("gluing two one-holed tori gives genus two") {
  Surface g = genus_two_glued();
  CHECK(g.circles.empty());
  CHECK(g.validate().ok);
  CHECK(g.euler_characteristic() == -2);
}

TEST_CASE("build_surface rejects inconsistent edges") {
  std::vector<std::vector<Side>> faces = {{{"a", "x"}, {"b", "y"}, {"c", "z"}}, {{"a", "x"}, {"d", "z"}, {"e", "y"}}};
  CHECK_THROWS_AS(build_surface(faces, {{"x", true}}), Error);
}

}
