#include <doctest.h>

#include <random>

#include "pachner/gf2_kernels.hpp"
#include "pachner/gf2_matrix.hpp"

using namespace pachner;

namespace {

BitMatrix random_bits(std::mt19937_64& rng, int rows, int cols) {
  BitMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, rng() % 3 == 0);
  return m;
}

}  // namespace

TEST_SUITE("gf2_kernels") {

TEST_CASE("vector kernels agree with the scalar reference") {
  const gf2::Kernels& s = gf2::scalar_kernels();
  const gf2::Kernels* v = gf2::vector_kernels();
  if (!v) {
    MESSAGE("no vector kernels on this CPU");
    return;
  }
  std::mt19937_64 rng(1);
  for (std::size_t words : {1u, 3u, 4u, 5u, 8u, 17u}) {
    for (int t = 0; t < 50; ++t) {
      std::vector<std::uint64_t> a(words), b(words);
      for (auto& x : a) x = rng() & rng();
      for (auto& x : b) x = rng();
      if (t % 5 == 0) std::fill(a.begin(), a.end() - 1, 0);
      auto a1 = a, a2 = a;
      s.xor_into(a1.data(), b.data(), words);
      v->xor_into(a2.data(), b.data(), words);
      CHECK(a1 == a2);
      CHECK(s.popcount(a.data(), words) == v->popcount(a.data(), words));
      for (std::size_t from = 0; from < words; ++from)
        CHECK(s.first_set(a.data(), words, from) == v->first_set(a.data(), words, from));
    }
  }
}

TEST_CASE("rank and solve do not depend on the kernel variant") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    BitMatrix m = random_bits(rng, 40, 150);
    std::vector<std::uint8_t> b(40);
    for (auto& x : b) x = rng() % 2;
    gf2::force_scalar(true);
    int r1 = gf2_rank(m);
    auto x1 = gf2_solve(m, b);
    gf2::force_scalar(false);
    CHECK(gf2_rank(m) == r1);
    CHECK(gf2_solve(m, b) == x1);
  }
}

TEST_CASE("solutions satisfy the system") {
  std::mt19937_64 rng(3);
  BitMatrix m = random_bits(rng, 30, 70);
  std::vector<std::uint8_t> x(70);
  for (auto& v : x) v = rng() % 2;
  std::vector<std::uint8_t> b(30, 0);
  for (int r = 0; r < 30; ++r)
    for (int c = 0; c < 70; ++c) b[r] ^= m.get(r, c) & x[c];
  auto y = gf2_solve(m, b);
  REQUIRE(y);
  for (int r = 0; r < 30; ++r) {
    std::uint8_t s = 0;
    for (int c = 0; c < 70; ++c) s ^= m.get(r, c) & (*y)[c];
    CHECK(s == b[r]);
  }
}

TEST_CASE("column reducer expresses targets and finds kernels") {
  SparseGf2 m(3, 4);
  m.toggle(0, 0);
  m.toggle(1, 0);
  m.toggle(1, 1);
  m.toggle(2, 1);
  m.toggle(0, 2);
  m.toggle(2, 2);
  m.toggle(0, 3);
  m.finalize();
  Gf2ColumnReducer red(m);
  CHECK(red.rank() == 3);
  CHECK(red.kernel().size() == 1);
  CHECK(red.kernel()[0] == std::vector<int>{0, 1, 2});
  auto e = red.express({1, 2});
  REQUIRE(e);
  CHECK(symmetric_difference({0, 1}, {1, 2}) == std::vector<int>{0, 2});
}

}
