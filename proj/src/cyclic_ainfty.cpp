#include "pachner/cyclic_ainfty.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pachner/state_sum.hpp"
#include "pachner/surface_builders.hpp"
#include "pachner/tensor_ops.hpp"

namespace pachner {

GradedTensor CyclicAInfty::c_or_zero(int n) const {
  if (n > n_max) throw Error("polygon with " + std::to_string(n) + " sides exceeds n_max = " + std::to_string(n_max));
  auto it = c.find(n);
  if (it != c.end()) return it->second;
  return GradedTensor(basis, ring, n, 3 - n);
}

bool CyclicAInfty::vanishes(int n) const {
  auto it = c.find(n);
  return it == c.end() || it->second.is_zero();
}

bool CyclicAInfty::strict() const {
  if (!Q.is_zero()) return false;
  for (const auto& [n, t] : c)
    if (n >= 4 && !t.is_zero()) return false;
  return true;
}

std::vector<std::vector<std::vector<Rational>>> CyclicAInfty::m2() const {
  const int d = basis->size();
  std::vector<std::vector<std::vector<Rational>>> m(d, std::vector<std::vector<Rational>>(d, std::vector<Rational>(d)));
  GradedTensor c3 = c_or_zero(3);
  for (const auto& [idx, val] : c3.entries()) {
    for (int x = 0; x < d; ++x) {
      Rational gi = ginv.at({x, idx[0]});
      if (!is_zero(gi)) m[idx[1]][idx[2]][x] = add(ring, m[idx[1]][idx[2]][x], mul(ring, gi, val));
    }
  }
  return m;
}

CyclicAInfty make_algebra(std::string name, Ring ring, BasisPtr basis, GradedTensor g, Matrix q,
                          std::map<int, GradedTensor> c, int n_max) {
  CyclicAInfty v;
  v.name = std::move(name);
  v.ring = ring;
  v.basis = basis;
  v.n_max = n_max;
  const int d = basis->size();
  if (g.arity() != 2 || g.degree() != 0 || !(g.basis() == *basis) || g.ring() != ring)
    throw Error("metric must be a degree 0 arity 2 tensor on the algebra's basis");
  v.g = g;
  v.ginv = invert_metric(g);
  if (q.rows() == 0 && q.cols() == 0) q = Matrix(ring, d, d);
  if (q.rows() != d || q.cols() != d || q.ring() != ring) throw Error("Q has the wrong shape");
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      if (!is_zero(q(a, b)) && !degrees_match(ring, basis->degree(a), basis->degree(b) + 1))
        throw Error("Q does not have degree +1 at (" + basis->label(a) + "," + basis->label(b) + ")");
  if (!is_square_zero(q)) throw Error("Q does not square to zero");
  v.Q = q;
  if (!apply_Q(g, q).is_zero()) throw Error("metric is not Q-invariant");
  for (auto& [n, t] : c) {
    if (n < 3 || n > n_max) throw Error("operation arity " + std::to_string(n) + " out of range");
    if (t.arity() != n || t.degree() != 3 - n || !(t.basis() == *basis) || t.ring() != ring)
      throw Error("operation c" + std::to_string(n) + " has the wrong shape or degree");
  }
  v.c = std::move(c);
  return v;
}

int GroupTable::identity() const {
  for (int a = 0; a < order(); ++a) {
    bool ok = true;
    for (int b = 0; b < order() && ok; ++b) ok = mul[a][b] == b && mul[b][a] == b;
    if (ok) return a;
  }
  throw Error("group table has no identity");
}

int GroupTable::inverse(int a) const {
  int e = identity();
  for (int b = 0; b < order(); ++b)
    if (mul[a][b] == e) return b;
  throw Error("group element without inverse");
}

void check_group(const GroupTable& t) {
  const int n = t.order();
  if (n == 0) throw Error("empty group table");
  if (static_cast<int>(t.mul.size()) != n) throw Error("group table has the wrong size");
  for (const auto& row : t.mul) {
    if (static_cast<int>(row.size()) != n) throw Error("group table has the wrong size");
    for (int x : row)
      if (x < 0 || x >= n) throw Error("group table is not closed");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (t.mul[t.mul[a][b]][c] != t.mul[a][t.mul[b][c]])
          throw Error("group table is not associative at (" + t.labels[a] + "," + t.labels[b] + "," + t.labels[c] + ")");
  t.identity();
  for (int a = 0; a < n; ++a) t.inverse(a);
}

GroupTable cyclic_group(int n) {
  GroupTable t;
  for (int i = 0; i < n; ++i) t.labels.push_back(i == 0 ? "e" : (i == 1 ? "a" : "a" + std::to_string(i)));
  t.mul.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.mul[i][j] = (i + j) % n;
  return t;
}

GroupTable symmetric_group3() {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  GroupTable t;
  t.labels = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  t.mul.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> p{};
      for (int i = 0; i < 3; ++i) p[i] = perms[a][perms[b][i]];
      t.mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
    }
  }
  return t;
}

GradedTensor trace_metric(const BasisPtr& basis, Ring ring, const StructureConstants& m) {
  const int d = basis->size();
  GradedTensor g(basis, ring, 2, 0);
  for (int x = 0; x < d; ++x) {
    for (int y = 0; y < d; ++y) {
      Rational s = 0;
      for (int b = 0; b < d; ++b)
        for (int c = 0; c < d; ++c) s += m[y][b][c] * m[x][c][b];
      Rational r = reduce(ring, s);
      if (!is_zero(r)) g.set({x, y}, r);
    }
  }
  return g;
}

namespace {

void check_structure(const BasisPtr& basis, Ring ring, const StructureConstants& m) {
  const int d = basis->size();
  if (static_cast<int>(m.size()) != d) throw Error("structure constants have the wrong size");
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != d) throw Error("structure constants have the wrong size");
    for (const auto& col : row)
      if (static_cast<int>(col.size()) != d) throw Error("structure constants have the wrong size");
  }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int x = 0; x < d; ++x) {
        if (is_zero(reduce(ring, m[a][b][x]))) continue;
        if (!degrees_match(ring, basis->degree(a) + basis->degree(b), basis->degree(x)))
          throw Error("product does not preserve degree");
      }
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int x = 0; x < d; ++x) {
          Rational left = 0, right = 0;
          for (int y = 0; y < d; ++y) {
            left += m[a][b][y] * m[y][c][x];
            right += m[b][c][y] * m[a][y][x];
          }
          if (!is_zero(reduce(ring, left - right)))
            throw Error("product is not associative at (" + basis->label(a) + "," + basis->label(b) + "," +
                        basis->label(c) + ")");
        }
}

}  // namespace

CyclicAInfty from_strict_frobenius(std::string name, Ring ring, BasisPtr basis, const StructureConstants& m,
                                   std::optional<GradedTensor> g_opt) {
  check_structure(basis, ring, m);
  const int d = basis->size();
  GradedTensor g = g_opt ? *g_opt : trace_metric(basis, ring, m);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c) {
        Rational l = 0, r = 0;
        for (int y = 0; y < d; ++y) {
          l += g.at({y, c}) * m[a][b][y];
          r += g.at({a, y}) * m[b][c][y];
        }
        if (!is_zero(reduce(ring, l - r))) throw Error("metric is not invariant: g(ab,c) != g(a,bc)");
      }
  GradedTensor c3(basis, ring, 3, 0);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y)
      for (int z = 0; z < d; ++z) {
        Rational s = 0;
        for (int w = 0; w < d; ++w) s += g.at({x, w}) * m[y][z][w];
        s = reduce(ring, s);
        if (!is_zero(s)) c3.set({x, y, z}, s);
      }
  return make_algebra(std::move(name), ring, basis, g, Matrix(ring, d, d), {{3, c3}});
}

CyclicAInfty from_group_algebra(const GroupTable& t, Ring ring, std::string name) {
  check_group(t);
  const int n = t.order();
  std::vector<BasisElement> els;
  for (const auto& l : t.labels) els.push_back({l, 0});
  BasisPtr basis = make_basis(els);
  StructureConstants m(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m[a][b][t.mul[a][b]] = 1;
  GradedTensor g = trace_metric(basis, ring, m);
  if (g.is_zero()) {
    const int e = t.identity();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (t.mul[a][b] == e) g.set({a, b}, 1);
  }
  return from_strict_frobenius(std::move(name), ring, basis, m, g);
}

CyclicAInfty builtin_algebra(const std::string& name, Ring ring) {
  if (name == "Z2") return from_group_algebra(cyclic_group(2), ring, name);
  if (name == "Z3") return from_group_algebra(cyclic_group(3), ring, name);
  if (name == "S3") return from_group_algebra(symmetric_group3(), ring, name);
  if (name == "trunc2" || name == "trunc3") {
    const int n = name == "trunc2" ? 2 : 3;
    std::vector<BasisElement> els;
    for (int i = 0; i < n; ++i) els.push_back({i == 0 ? "1" : (i == 1 ? "x" : "x" + std::to_string(i)), 0});
    BasisPtr basis = make_basis(els);
    StructureConstants m(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i + j < n) m[i][j][i + j] = 1;
    GradedTensor g(basis, ring, 2, 0);
    for (int i = 0; i < n; ++i) g.set({i, n - 1 - i}, 1);
    return from_strict_frobenius(name, ring, basis, m, g);
  }
  if (name == "M2") {
    BasisPtr basis = make_basis({{"E11", 0}, {"E12", 0}, {"E21", 0}, {"E22", 0}});
    StructureConstants m(4, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4)));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) m[2 * i + j][2 * j + k][2 * i + k] = 1;
    if (ring == Ring::Q) return from_strict_frobenius(name, ring, basis, m);
    // The derived metric is 2 tr(xy), zero mod 2; use tr(xy).
    GradedTensor g(basis, ring, 2, 0);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) g.set({2 * i + j, 2 * j + i}, 1);
    return from_strict_frobenius(name, ring, basis, m, g);
  }
  if (name == "M11") {
    if (ring != Ring::GF2) throw Error("M11 is only graded mod 2; use ring GF2");
    return regrade(builtin_algebra("M2", ring), {0, 1, 1, 0});
  }
  if (name == "Cl1") {
    if (ring != Ring::GF2) throw Error("Cl1 is only graded mod 2; use ring GF2");
    BasisPtr basis = make_basis({{"u", 0}, {"v", 1}});
    StructureConstants m(2, std::vector<std::vector<Rational>>(2, std::vector<Rational>(2)));
    m[0][0][0] = 1;
    m[0][1][1] = 1;
    m[1][0][1] = 1;
    m[1][1][0] = 1;
    GradedTensor g(basis, ring, 2, 0);
    g.set({0, 0}, 1);
    g.set({1, 1}, 1);
    return from_strict_frobenius(name, ring, basis, m, g);
  }
  throw Error("unknown builtin algebra '" + name + "'");
}

CyclicAInfty regrade(const CyclicAInfty& v, const std::vector<int>& degrees) {
  const int d = v.basis->size();
  if (static_cast<int>(degrees.size()) != d) throw Error("regrade needs one degree per basis vector");
  std::vector<BasisElement> els = v.basis->elements();
  for (int i = 0; i < d; ++i) els[i].degree = degrees[i];
  BasisPtr basis = make_basis(els);
  auto move = [&](const GradedTensor& t) {
    GradedTensor out(basis, v.ring, t.arity(), t.degree());
    for (const auto& [idx, val] : t.entries()) {
      if (!out.degree_allows(idx)) throw Error("regrading is incompatible with the operations");
      out.set(idx, val);
    }
    return out;
  };
  std::map<int, GradedTensor> c;
  for (const auto& [n, t] : v.c) c.emplace(n, move(t));
  return make_algebra(v.name, v.ring, basis, move(v.g), v.Q, std::move(c), v.n_max);
}

namespace {

std::string describe_entry(const GradedTensor& t, const Index& idx, const Rational& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + t.basis().label(idx[i]);
  return s + ") = " + to_string(v);
}

}  // namespace

RelationReport verify_relations(const CyclicAInfty& v, int n_max) {
  RelationReport rep;
  if (n_max > v.n_max) throw Error("missing tensor arity: algebra stops at n_max = " + std::to_string(v.n_max));
  ZCache cache(v);
  bool any_skip = false;
  for (int n = 3; n <= n_max; ++n) {
    Surface disk = canonicalize(disk_polygon(n));
    CanonicalCode code = canonical_code(disk);
    if (v.ring == Ring::Q && n >= 6) {
      bool all_zero = !v.Q.is_zero() ? apply_Q(cache.get(code, disk), v.Q).is_zero() : true;
      for (const auto& f : cell_boundary(disk, false)) all_zero = all_zero && cache.get(f.code, f.rep).is_zero();
      rep.per_n.emplace_back(n, all_zero ? "pass" : "skipped");
      any_skip = any_skip || !all_zero;
      continue;
    }
    GradedTensor defect = closedness_defect(disk, v, cache);
    if (defect.is_zero()) {
      rep.per_n.emplace_back(n, "pass");
      continue;
    }
    rep.per_n.emplace_back(n, "fail");
    if (rep.status != "fail") {
      rep.status = "fail";
      rep.failing_n = n;
      const auto& [idx, val] = *defect.entries().begin();
      rep.witness = "n=" + std::to_string(n) + " relation violated at " + describe_entry(defect, idx, val);
    }
  }
  if (rep.status == "pass" && any_skip) rep.status = "skipped";
  return rep;
}

GradedTensor rotate_once(const GradedTensor& t) {
  const int n = t.arity();
  GradedTensor out(t.basis_ptr(), t.ring(), n, t.degree());
  for (const auto& [idx, val] : t.entries()) {
    Index j(n);
    for (int i = 0; i + 1 < n; ++i) j[i] = idx[i + 1];
    j[n - 1] = idx[0];
    long e = n - 1;
    long rest = 0;
    for (int i = 1; i < n; ++i) rest += t.basis().degree(idx[i]);
    e += static_cast<long>(t.basis().degree(idx[0])) * rest;
    out.set(j, mul(t.ring(), sign_power(t.ring(), e), val));
  }
  return out;
}

RelationReport verify_cyclicity(const CyclicAInfty& v) {
  RelationReport rep;
  for (const auto& [n, t] : v.c) {
    GradedTensor r = rotate_once(t);
    GradedTensor diff = r - t;
    if (diff.is_zero()) {
      rep.per_n.emplace_back(n, "pass");
      continue;
    }
    rep.per_n.emplace_back(n, "fail");
    if (rep.status == "pass") {
      rep.status = "fail";
      rep.failing_n = n;
      const auto& [idx, val] = *diff.entries().begin();
      rep.witness = "c" + std::to_string(n) + " not cyclic: rotation differs at " + describe_entry(diff, idx, val);
    }
  }
  return rep;
}

std::optional<CyclicAInfty> find_minimal_m3(const CyclicAInfty& strict_v, MinimalSearch* info) {
  if (strict_v.ring != Ring::GF2) throw Error("minimal search runs over GF2");
  if (!strict_v.strict()) throw Error("minimal search expects a strict algebra");
  if (strict_v.basis->size() > 4) throw Error("minimal search is limited to dim V <= 4");
  MinimalSearch local;
  MinimalSearch& out = info ? *info : local;
  out = MinimalSearch{};
  auto tuples = GradedTensor::all_indices(*strict_v.basis, Ring::GF2, 4, -1);
  std::set<Index> seen;
  std::vector<std::vector<Index>> orbits;
  for (const auto& t : tuples) {
    if (seen.count(t)) continue;
    std::vector<Index> orb;
    Index r = t;
    for (int s = 0; s < 4; ++s) {
      if (!seen.count(r)) {
        seen.insert(r);
        orb.push_back(r);
      }
      std::rotate(r.begin(), r.begin() + 1, r.end());
    }
    orbits.push_back(orb);
  }
  out.orbits = static_cast<int>(orbits.size());
  if (orbits.empty()) return std::nullopt;
  auto with_c4 = [&](const std::vector<int>& coeffs) {
    GradedTensor c4(strict_v.basis, Ring::GF2, 4, -1);
    for (std::size_t o = 0; o < orbits.size(); ++o)
      if (coeffs[o])
        for (const auto& t : orbits[o]) c4.set(t, 1);
    CyclicAInfty w = strict_v;
    w.c[4] = c4;
    w.name = "minimal(" + strict_v.name + ")";
    return w;
  };
  // The pentagon relation is linear in c4: build its matrix column by column.
  Surface pent = canonicalize(disk_polygon(5));
  auto rows = GradedTensor::all_indices(*strict_v.basis, Ring::GF2, 5, -1);
  std::map<Index, int> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = static_cast<int>(i);
  Matrix lin(Ring::GF2, static_cast<int>(rows.size()), static_cast<int>(orbits.size()));
  for (std::size_t o = 0; o < orbits.size(); ++o) {
    std::vector<int> e(orbits.size(), 0);
    e[o] = 1;
    CyclicAInfty w = with_c4(e);
    ZCache cache(w);
    GradedTensor defect = closedness_defect(pent, w, cache);
    for (const auto& [idx, val] : defect.entries()) lin.set(row_of.at(idx), static_cast<int>(o), 1);
  }
  auto kernel = kernel_basis(lin);
  out.cocycle_dimension = static_cast<int>(kernel.size());
  if (kernel.size() > 20) throw Error("minimal search space too large (cocycle dimension " + std::to_string(kernel.size()) + ")");
  std::vector<std::vector<int>> found;
  for (long mask = 1; mask < (1L << kernel.size()); ++mask) {
    std::vector<int> coeffs(orbits.size(), 0);
    for (std::size_t b = 0; b < kernel.size(); ++b)
      if (mask >> b & 1)
        for (std::size_t o = 0; o < orbits.size(); ++o) coeffs[o] ^= is_zero(kernel[b][o]) ? 0 : 1;
    ++out.candidates;
    if (std::all_of(coeffs.begin(), coeffs.end(), [](int x) { return x == 0; })) continue;
    CyclicAInfty w = with_c4(coeffs);
    if (verify_relations(w, 6).status == "pass") found.push_back(coeffs);
  }
  std::sort(found.begin(), found.end());
  for (const auto& f : found) out.solutions.push_back(with_c4(f).c.at(4));
  if (found.empty()) return std::nullopt;
  return with_c4(found.front());
}

}  // namespace pachner
