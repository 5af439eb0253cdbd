#include <doctest.h>

#include <random>

#include "pachner/formal_series.hpp"
#include "pachner/sp_algebras.hpp"

using namespace pachner;

namespace {

PointConfiguration xy(std::vector<std::pair<int, int>> pts) {
  std::vector<std::pair<Rational, Rational>> v;
  for (auto [x, y] : pts) v.push_back({x, y});
  return make_configuration(v);
}

Matrix mat(std::vector<std::vector<int>> rows) {
  Matrix m(Ring::Q, static_cast<int>(rows.size()), static_cast<int>(rows.size()));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m.set(r, c, rows[r][c]);
  return m;
}

std::vector<Rational> line(int m) {
  std::vector<Rational> xs;
  for (int i = 0; i < m; ++i) xs.push_back(3 * i + (i % 2));
  return xs;
}

SP1Algebra projector(bool idempotent) {
  SP1Algebra a;
  a.degrees = {0, 0};
  a.Q = Matrix(Ring::Q, 2, 2);
  a.order = 0;
  a.U = {MatrixSeries::constant(idempotent ? mat({{1, 0}, {0, 0}}) : mat({{2, 0}, {0, 0}}), 0)};
  return a;
}

}  // namespace

TEST_SUITE("sp_algebras") {

TEST_CASE("configuration keys are translation invariant") {
  PointConfiguration a = xy({{3, 1}, {5, 1}, {3, 4}});
  PointConfiguration b = xy({{0, 0}, {2, 0}, {0, 3}});
  CHECK(configuration_key(a, {0, 1, 2}) == configuration_key(b, {2, 1, 0}));
  CHECK(configuration_key(b, {0, 1, 2}) == "0,0;0,3;2,0");
}

TEST_CASE("strict Ahat algebras over Q satisfy the model on every face") {
  for (auto pts : {std::vector<std::pair<int, int>>{{0, 0}, {4, 0}, {0, 4}, {1, 1}},
                   std::vector<std::pair<int, int>>{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 2}},
                   std::vector<std::pair<int, int>>{{0, 0}, {2, 0}, {3, 2}, {1, 3}, {-1, 2}}}) {
    SecondaryPolytope sp = build_sp(xy(pts));
    for (const char* name : {"Z2", "S3"}) {
      AhatAlgebra v = strict_ahat(builtin_algebra(name, Ring::Q));
      Model2Report r = model2_check(sp, v);
      CHECK(r.status == "pass");
      CHECK(verify_ahat_relation(sp, v).status == "pass");
    }
  }
}

TEST_CASE("odd group over GF2 satisfies the model") {
  SecondaryPolytope sp = build_sp(xy({{0, 0}, {6, 0}, {0, 6}, {1, 2}, {3, 1}}));
  CHECK(model2_check(sp, strict_ahat(builtin_algebra("Z3", Ring::GF2))).status == "pass");
}

TEST_CASE("model Z of a triangulated square contracts two products") {
  PointConfiguration a = xy({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  AhatAlgebra v = strict_ahat(builtin_algebra("Z2", Ring::Q));
  MarkedSubdivision t{{{0, 1, 2}, {0, 2, 3}}};
  GradedTensor z = model2_Z(a, t, v);
  // Z2 algebra: c4-type value g(x y, z w) = 2 [xyzw = e] with metric 2 delta.
  CHECK(z.at({0, 0, 0, 0}) == 2);
  CHECK(z.at({1, 1, 0, 0}) == 2);
  CHECK(z.at({1, 0, 0, 0}) == 0);
}

TEST_CASE("missing floating-point operations are reported") {
  PointConfiguration a = xy({{0, 0}, {4, 0}, {0, 4}, {1, 1}});
  AhatAlgebra v;
  v.base = builtin_algebra("Z2", Ring::Q);
  CHECK_THROWS_WITH_AS(v.op_for_cell(a, {0, 1, 2, 3}), doctest::Contains("0,0"), Error);
  GradedTensor bad(v.base.basis, Ring::Q, 2, 0);
  CHECK_THROWS_AS(v.add_op(a, bad), Error);
}

TEST_CASE("formal series identities") {
  Matrix h = mat({{0, 1, 0}, {0, 0, 2}, {1, 0, 0}});
  const int n = 5;
  MatrixSeries e = MatrixSeries::exp_t(h, n), em = MatrixSeries::exp_t(h.scaled(-1), n);
  CHECK(e * em == MatrixSeries::identity(3, n));
  // divided difference times h is exp(2Th) - exp(Th)
  MatrixSeries dd = MatrixSeries::divided_difference(h, n);
  MatrixSeries lhs = dd.left(h);
  MatrixSeries rhs = MatrixSeries::exp_t(h.scaled(2), n) - e;
  for (int k = 0; k < n; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
  CHECK(dd.coeff(0).is_zero());
  CHECK(dd.coeff(1) == Matrix::identity(Ring::Q, 3));
}

TEST_CASE("SP1 from a continuum algebra") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    Matrix q(Ring::Q, 4, 4), g(Ring::Q, 4, 4);
    for (int r = 2; r < 4; ++r)
      for (int c = 0; c < 2; ++c)
        if (rng() % 2) {
          q.set(r, c, 1);
          g.set(c, r, 1);
        }
    SP1Algebra a = sp1_from_continuum({0, 0, 1, 1}, q, g, 6);
    SP1Report r = sp1_verify(a, 4);
    CHECK(r.status == "pass");
    SecondaryPolytope sp = build_sp(points_on_line(line(4)));
    CHECK(htqm_check(sp, a).status == "pass");
  }
}

TEST_CASE("idempotents are SP1 algebras and other constants are not") {
  CHECK(sp1_verify(projector(true), 3).status == "pass");
  SP1Report r = sp1_verify(projector(false), 3);
  CHECK(r.status == "fail");
  CHECK(r.failing_n == 1);
  for (int m = 3; m <= 5; ++m) {
    SecondaryPolytope sp = build_sp(points_on_line(line(m)));
    CHECK(htqm_check(sp, projector(true)).status == "pass");
    CHECK(htqm_check(sp, projector(false)).status == "fail");
  }
}

TEST_CASE("infinitesimal relations") {
  Matrix q(Ring::Q, 2, 2), g(Ring::Q, 2, 2);
  q.set(1, 0, 1);
  g.set(0, 1, 1);
  Matrix h = q * g + g * q;
  CHECK(infinitesimal_sp1_verify({0, 1}, q, {h, g}, 4).status == "pass");

  Matrix z(Ring::Q, 3, 3), g2 = mat({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  SP1Report bad = infinitesimal_sp1_verify({0, 1, 2}, z, {z, g2}, 4);
  CHECK(bad.status == "fail");
  CHECK(bad.failing_n == 3);
  CHECK_THROWS_AS(infinitesimal_sp1_verify({0}, Matrix(Ring::GF2, 1, 1), {}, 2), Error);
}

TEST_CASE("htqm value multiplies cells left to right") {
  PointConfiguration a = points_on_line({0, 1, 2});
  SP1Algebra alg;
  alg.degrees = {0, 0};
  alg.Q = Matrix(Ring::Q, 2, 2);
  alg.order = 0;
  alg.U = {MatrixSeries::constant(mat({{1, 1}, {0, 1}}), 0)};
  MarkedSubdivision split{{{0, 1}, {1, 2}}};
  CHECK(htqm_Z(a, split, alg).coeff(0) == mat({{1, 2}, {0, 1}}));
}

}
