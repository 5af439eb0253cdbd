#include <doctest.h>

#include <random>

#include "pachner/contraction.hpp"
#include "pachner/matrix.hpp"
#include "pachner/tensor.hpp"
#include "pachner/tensor_ops.hpp"

using namespace pachner;

namespace {

BasisPtr even_basis(int n) {
  std::vector<BasisElement> e;
  for (int i = 0; i < n; ++i) e.push_back({"e" + std::to_string(i), 0});
  return make_basis(e);
}

Matrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(Ring::Q, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  return m;
}

}  // namespace

TEST_SUITE("algebra_core") {

TEST_CASE("ring arithmetic") {
  CHECK(reduce(Ring::GF2, Rational(3)) == 1);
  CHECK(reduce(Ring::GF2, Rational(1, 3)) == 1);
  CHECK_THROWS_AS(reduce(Ring::GF2, Rational(1, 2)), Error);
  CHECK(add(Ring::GF2, 1, 1) == 0);
  CHECK(add(Ring::Q, 1, 1) == 2);
  CHECK(inv(Ring::Q, Rational(-2, 3)) == Rational(-3, 2));
  CHECK(sign_power(Ring::Q, 3) == -1);
  CHECK(sign_power(Ring::GF2, 3) == 1);
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(parse_ring("Q") == Ring::Q);
}

TEST_CASE("koszul signs") {
  CHECK(koszul_sign({1, 1}, {1, 0}) == -1);
  CHECK(koszul_sign({1, 0}, {1, 0}) == 1);
  CHECK(koszul_sign({1, 1, 1}, {2, 0, 1}) == 1);
  CHECK(koszul_sign({1, 1, 1}, {2, 1, 0}) == -1);
}

TEST_CASE("tensor permutation and degree rule") {
  auto b = make_basis({{"x", 1}, {"y", 0}});
  GradedTensor t(b, Ring::Q, 2, -1);
  CHECK(t.degree_allows({0, 1}));
  CHECK_FALSE(t.degree_allows({0, 0}));
  CHECK_THROWS(t.set({0, 0}, 1));
  t.set({0, 1}, 5);
  GradedTensor p = t.permuted({1, 0});
  CHECK(p.at({1, 0}) == 5);
  CHECK(p.permuted({1, 0}) == t);

  GradedTensor u(b, Ring::Q, 2, -2);
  u.set({0, 0}, 1);
  CHECK(u.permuted({1, 0}).at({0, 0}) == -1);
}

TEST_CASE("elimination, inverse and kernels") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = random_matrix(rng, 4, 4, -3, 3);
    auto inv_m = inverse(m);
    auto ker = kernel_vector(m);
    CHECK(inv_m.has_value() != ker.has_value());
    if (inv_m) CHECK(m * *inv_m == Matrix::identity(Ring::Q, 4));
    if (ker) {
      Matrix v(Ring::Q, 4, 1);
      for (int i = 0; i < 4; ++i) v.set(i, 0, (*ker)[i]);
      CHECK((m * v).is_zero());
    }
  }
  Matrix rank2(Ring::Q, 3, 3);
  rank2.set(0, 0, 1);
  rank2.set(1, 1, 1);
  rank2.set(2, 0, 1);
  rank2.set(2, 1, 1);
  CHECK(row_reduce(rank2).rank == 2);
  CHECK(kernel_basis(rank2).size() == 1);
  auto x = solve(rank2, {1, 2, 3});
  REQUIRE(x);
  CHECK((*x)[0] == 1);
  CHECK_FALSE(solve(rank2, {1, 2, 4}));
}

TEST_CASE("contraction of a chain of 2-tensors is a matrix product") {
  std::mt19937 rng(11);
  const int n = 3;
  auto b = even_basis(n);
  Matrix a = random_matrix(rng, n, n, -2, 2), c = random_matrix(rng, n, n, -2, 2);
  Matrix g = Matrix::identity(Ring::Q, n) + random_matrix(rng, n, n, 0, 1).scaled(Rational(1, 5));
  g = g + g.transposed();
  GradedTensor ta = matrix_to_tensor(a, b, 0), tc = matrix_to_tensor(c, b, 0);
  GradedTensor gt = matrix_to_tensor(g, b, 0);
  GradedTensor ginv = invert_metric(gt);
  ContractionNetwork net;
  net.nodes = {&ta, &tc};
  net.edges = {{Leg{0, 1}, Leg{1, 0}}};
  net.open = {Leg{0, 0}, Leg{1, 1}};
  GradedTensor r = contract(net, ginv);
  Matrix expected = a * *inverse(g) * c;
  CHECK(tensor_to_matrix(r) == expected);
}

TEST_CASE("singular metric reports a kernel vector") {
  auto b = even_basis(2);
  Matrix g(Ring::Q, 2, 2);
  g.set(0, 0, 1);
  g.set(0, 1, 1);
  g.set(1, 0, 1);
  g.set(1, 1, 1);
  try {
    invert_metric(matrix_to_tensor(g, b, 0));
    FAIL("expected MetricError");
  } catch (const MetricError& e) {
    REQUIRE(e.witness.size() == 2);
    CHECK(e.witness[0] == -e.witness[1]);
  }
}

TEST_CASE("apply_Q squares to zero and q_exact_witness inverts it") {
  auto b = make_basis({{"u", 0}, {"v", 1}});
  Matrix q(Ring::Q, 2, 2);
  q.set(1, 0, 1);  // Q u = v
  CHECK(is_square_zero(q));
  GradedTensor t(b, Ring::Q, 2, -2);
  t.set({1, 1}, 3);
  GradedTensor qt = apply_Q(t, q);
  CHECK_FALSE(qt.is_zero());
  CHECK(apply_Q(qt, q).is_zero());
  auto s = q_exact_witness(qt, q);
  REQUIRE(s);
  CHECK(apply_Q(*s, q) == qt);
}

}
