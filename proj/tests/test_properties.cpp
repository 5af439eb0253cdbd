#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pachner/contraction.hpp"
#include "pachner/surface.hpp"
#include "pachner/surface_builders.hpp"
#include "pachner/tensor_ops.hpp"

using namespace pachner;

namespace {

constexpr int kInstances = 100;

BasisPtr graded_basis() { return make_basis({{"a", 0}, {"b", 0}, {"x", 1}, {"y", -1}}); }

GradedTensor random_tensor(std::mt19937& rng, const BasisPtr& b, int arity, int degree, int density = 2) {
  GradedTensor t(b, Ring::Q, arity, degree);
  std::uniform_int_distribution<int> val(-3, 3);
  for (const Index& idx : GradedTensor::all_indices(*b, Ring::Q, arity, degree))
    if (static_cast<int>(rng() % density) == 0) t.set(idx, val(rng));
  return t;
}

std::vector<int> random_perm(std::mt19937& rng, int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Symmetric invertible metric on graded_basis().
GradedTensor random_metric(std::mt19937& rng, const BasisPtr& b) {
  std::uniform_int_distribution<int> val(-3, 3);
  GradedTensor g(b, Ring::Q, 2, 0);
  for (;;) {
    int p = val(rng), q = val(rng), r = val(rng), s = val(rng);
    if (p * r - q * q == 0 || s == 0) continue;
    g.set({0, 0}, p);
    g.set({0, 1}, q);
    g.set({1, 0}, q);
    g.set({1, 1}, r);
    g.set({2, 3}, s);
    g.set({3, 2}, s);
    return g;
  }
}

Matrix random_differential(std::mt19937& rng, const BasisPtr& b) {
  // Degree +1 maps: y -> a, b and a, b -> x. Q^2 = 0 needs (a,b)-row times column to vanish.
  std::uniform_int_distribution<int> val(-2, 2);
  Matrix q(Ring::Q, b->size(), b->size());
  int u = val(rng), v = val(rng);
  q.set(0, 3, u);
  q.set(1, 3, v);
  int w = val(rng);
  q.set(2, 0, w * v);
  q.set(2, 1, -w * u);
  return q;
}

}  // namespace

TEST_CASE("contraction does not depend on node order") {
  std::mt19937 rng(101);
  BasisPtr b = graded_basis();
  for (int inst = 0; inst < kInstances; ++inst) {
    std::vector<GradedTensor> t = {random_tensor(rng, b, 3, static_cast<int>(rng() % 3) - 1),
                                   random_tensor(rng, b, 3, static_cast<int>(rng() % 3) - 1),
                                   random_tensor(rng, b, 2, static_cast<int>(rng() % 3) - 1)};
    GradedTensor ginv = invert_metric(random_metric(rng, b));
    ContractionNetwork n;
    for (auto& x : t) n.nodes.push_back(&x);
    n.edges = {{{0, 2}, {1, 0}}, {{1, 2}, {2, 0}}};
    n.open = {{0, 0}, {0, 1}, {1, 1}, {2, 1}};
    GradedTensor base = contract(n, ginv);

    std::vector<int> p = random_perm(rng, 3);  // new position of old node i
    std::vector<int> where(3);
    for (int i = 0; i < 3; ++i) where[p[i]] = i;
    ContractionNetwork m;
    for (int i = 0; i < 3; ++i) m.nodes.push_back(&t[where[i]]);
    auto mv = [&](Leg l) { return Leg{p[l.node], l.slot}; };
    for (auto [x, y] : n.edges) m.edges.push_back({mv(x), mv(y)});
    for (Leg l : n.open) m.open.push_back(mv(l));
    CHECK(contract(m, ginv) == base);
  }
}

TEST_CASE("Koszul signs compose") {
  std::mt19937 rng(102);
  BasisPtr b = graded_basis();
  for (int inst = 0; inst < kInstances; ++inst) {
    const int arity = 2 + static_cast<int>(rng() % 3);
    GradedTensor t = random_tensor(rng, b, arity, static_cast<int>(rng() % 3) - 1, 3);
    std::vector<int> p = random_perm(rng, arity), q = random_perm(rng, arity), r(arity);
    for (int i = 0; i < arity; ++i) r[i] = p[q[i]];
    CHECK(t.permuted(p).permuted(q) == t.permuted(r));
    std::vector<int> inverse(arity);
    for (int i = 0; i < arity; ++i) inverse[p[i]] = i;
    CHECK(t.permuted(p).permuted(inverse) == t);
  }
}

TEST_CASE("metric inversion round trips") {
  std::mt19937 rng(103);
  BasisPtr b = graded_basis();
  for (int inst = 0; inst < kInstances; ++inst) {
    GradedTensor g = random_metric(rng, b);
    GradedTensor gi = invert_metric(g);
    CHECK(invert_metric(gi) == g);
    Matrix prod = tensor_to_matrix(g) * tensor_to_matrix(gi);
    CHECK(prod == Matrix::identity(Ring::Q, 4));
  }
}

TEST_CASE("induced differential squares to zero") {
  std::mt19937 rng(104);
  BasisPtr b = graded_basis();
  for (int inst = 0; inst < kInstances; ++inst) {
    Matrix q = random_differential(rng, b);
    REQUIRE(is_square_zero(q));
    GradedTensor t = random_tensor(rng, b, 1 + static_cast<int>(rng() % 3), static_cast<int>(rng() % 3) - 1);
    CHECK(apply_Q(apply_Q(t, q), q).is_zero());
  }
}

TEST_CASE("exact tensors have witnesses") {
  std::mt19937 rng(105);
  BasisPtr b = graded_basis();
  for (int inst = 0; inst < kInstances; ++inst) {
    Matrix q = random_differential(rng, b);
    GradedTensor s = random_tensor(rng, b, 2, static_cast<int>(rng() % 3) - 1);
    GradedTensor t = apply_Q(s, q);
    auto w = q_exact_witness(t, q);
    REQUIRE(w);
    CHECK(apply_Q(*w, q) == t);
  }
}

TEST_CASE("canonical codes survive flips and renumbering") {
  std::mt19937 rng(106);
  const std::vector<Surface> seeds = {fan_triangulate(disk_polygon(7)), strip("RLRS"), minimal_torus(),
                                      triangle_with_center(), genus_two_glued()};
  for (int inst = 0; inst < kInstances; ++inst) {
    Surface s = seeds[inst % seeds.size()];
    for (int step = 0; step < 4; ++step) {
      std::vector<int> interior;
      for (int d = 0; d < s.darts(); ++d)
        if (s.is_interior(d) && s.faces()[s.face_index()[d]].size() == 3 &&
            s.faces()[s.face_index()[s.inv[d]]].size() == 3 && s.face_index()[d] != s.face_index()[s.inv[d]])
          interior.push_back(d);
      if (interior.empty()) break;
      s = flip(s, interior[rng() % interior.size()]);
    }
    REQUIRE(s.validate().ok);
    const CanonicalCode c = canonical_code(s);
    Surface r = renumbered(s, random_perm(rng, s.darts()));
    CHECK(canonical_code(r) == c);
    CHECK(canonical_code(canonicalize(r)) == c);
  }
}
