#include <doctest.h>

#include "pachner/flip_complex.hpp"
#include "pachner/state_sum.hpp"
#include "pachner/surface_builders.hpp"
#include "pachner/tensor_ops.hpp"

using namespace pachner;

TEST_SUITE("state_sum") {

TEST_CASE("Dijkgraaf-Witten literals") {
  CHECK(dw_brute(cyclic_group(2), 1) == 2);
  CHECK(dw_brute(cyclic_group(3), 1) == 3);
  CHECK(dw_brute(cyclic_group(2), 2) == 8);
  CHECK(dw_brute(symmetric_group3(), 1) == 3);
  CHECK(dw_brute(symmetric_group3(), 2) == 81);
  CHECK(dw_from_irreps(6, {1, 1, 2}, 2) == 81);
  CHECK(dw_from_irreps(6, {1, 1, 2}, 1) == 3);
  CHECK(dw_from_irreps(4, {1, 1, 1, 1}, 3) == 1024);
  CHECK(dw_brute(cyclic_group(4), 3) == 1024);
}

TEST_CASE("group algebra state sum on closed surfaces") {
  for (const GroupTable& t : {cyclic_group(2), cyclic_group(3), symmetric_group3()}) {
    CyclicAInfty v = from_group_algebra(t, Ring::Q);
    for (int genus : {1, 2}) {
      Surface s = genus == 1 ? minimal_torus() : genus_two_glued();
      Rational z = evaluate_Z(s, v).tensor.at({});
      CHECK(dw_normalized(z, t.order(), s.euler_characteristic()) == dw_brute(t, genus));
    }
  }
}

TEST_CASE("Z of a triangle is c3 and Z is independent of the triangulation") {
  CyclicAInfty v = from_group_algebra(symmetric_group3(), Ring::Q);
  CHECK(evaluate_Z(disk_polygon(3), v).tensor == v.c.at(3));
  Surface a = fan_triangulate(disk_polygon(5));
  Surface b = flip(a, [&] {
    for (int d = 0; d < a.darts(); ++d)
      if (a.is_interior(d)) return d;
    return -1;
  }());
  CHECK(evaluate_Z(a, v).tensor == evaluate_Z(b, v).tensor);
}

TEST_CASE("closedness on disk complexes") {
  BuildOptions opt;
  opt.ring = Ring::Q;
  CyclicAInfty z2 = builtin_algebra("Z2", Ring::Q);
  FlipComplex fq = build_flip_complex(fan_triangulate(disk_polygon(6)), opt);
  ClosednessReport r = check_closedness(fq, z2, 3);
  CHECK(r.status != "fail");
  CHECK(r.failure_count == 0);

  auto m = find_minimal_m3(builtin_algebra("M11", Ring::GF2));
  REQUIRE(m);
  FlipComplex fg = build_flip_complex(fan_triangulate(disk_polygon(6)), {});
  ClosednessReport rg = check_closedness(fg, *m, 3);
  CHECK(rg.status == "pass");
  CHECK(rg.checked.size() == 4);
}

TEST_CASE("closedness fails for an algebra that is not A-infinity") {
  CyclicAInfty v = builtin_algebra("M11", Ring::GF2);
  auto m = find_minimal_m3(v);
  REQUIRE(m);
  GradedTensor other = m->c.at(4);
  other.set(other.entries().begin()->first, 0);
  CyclicAInfty w = *m;
  w.c[4] = other;
  FlipComplex fc = build_flip_complex(fan_triangulate(disk_polygon(5)), {});
  CHECK(check_closedness(fc, w, 2).status == "fail");
}

TEST_CASE("gluing cylinders is functorial") {
  CyclicAInfty v = builtin_algebra("Z2", Ring::Q);
  CHECK(check_functoriality(strip("R"), strip("L"), v).ok);
  CHECK(check_functoriality(strip("RS"), strip("LR"), v).ok);
  auto m = find_minimal_m3(builtin_algebra("M11", Ring::GF2));
  REQUIRE(m);
  CHECK(check_functoriality(strip("SR"), strip("LS"), *m).ok);
}

TEST_CASE("center reduction of S3") {
  CenterReduction c = center_reduction(from_group_algebra(symmetric_group3(), Ring::Q));
  CHECK(c.dim_center == 3);
  CHECK(c.dim_commutator == 3);
  CHECK(c.kernel_is_commutator);
  CHECK(c.restricts_to_g);
}

TEST_CASE("zero chain evaluates to an empty tensor") {
  CyclicAInfty v = builtin_algebra("Z2", Ring::Q);
  CHECK(evaluate_on_chain(Chain(Ring::Q), v).is_zero());
}

}
