#include "pachner/sp_algebras.hpp"

#include <algorithm>

#include "pachner/contraction.hpp"
#include "pachner/tensor_ops.hpp"

namespace pachner {

namespace {

int lex_min(const PointConfiguration& a, const std::vector<int>& pts) {
  return *std::min_element(pts.begin(), pts.end(), [&](int i, int j) { return a.coords[i] < a.coords[j]; });
}

std::vector<int> rotated_hull(const PointConfiguration& a, const std::vector<int>& pts) {
  auto h = cell_vertices(a, pts);
  std::rotate(h.begin(), std::find(h.begin(), h.end(), lex_min(a, pts)), h.end());
  return h;
}

std::vector<int> all_points(const PointConfiguration& a) {
  std::vector<int> v(a.size());
  for (int i = 0; i < a.size(); ++i) v[i] = i;
  return v;
}

std::string entry_witness(const GradedTensor& t) {
  const auto& [idx, val] = *t.entries().begin();
  std::string w = "(";
  for (std::size_t j = 0; j < idx.size(); ++j) w += (j ? "," : "") + t.basis().label(idx[j]);
  return w + ") = " + to_string(val);
}

}  // namespace

std::string configuration_key(const PointConfiguration& a, const std::vector<int>& points) {
  const auto& origin = a.coords[lex_min(a, points)];
  std::vector<std::vector<Rational>> rel;
  for (int p : points) {
    std::vector<Rational> r(a.d);
    for (int c = 0; c < a.d; ++c) r[c] = a.coords[p][c] - origin[c];
    rel.push_back(r);
  }
  std::sort(rel.begin(), rel.end());
  std::string key;
  for (const auto& r : rel) {
    if (!key.empty()) key += ";";
    for (int c = 0; c < a.d; ++c) key += (c ? "," : "") + to_string(r[c]);
  }
  return key;
}

void AhatAlgebra::add_op(const PointConfiguration& points, const GradedTensor& t) {
  if (points.d != 2) throw Error("operations are keyed by planar configurations");
  check_general_position(points);
  auto all = all_points(points);
  const int arity = static_cast<int>(cell_vertices(points, all).size());
  if (arity == points.size()) throw Error("configuration without floating points: use the cyclic operation c_n");
  if (t.arity() != arity) throw Error("operation arity must equal the number of hull vertices");
  if (t.degree() != 3 - points.size()) throw Error("operation degree must be 3 - |A|");
  if (!(t.basis() == *base.basis))
    throw Error("operation basis differs from the algebra");
  extra[configuration_key(points, all)] = t;
}

GradedTensor AhatAlgebra::op_for_cell(const PointConfiguration& a, const std::vector<int>& cell) const {
  const int verts = static_cast<int>(cell_vertices(a, cell).size());
  if (verts == static_cast<int>(cell.size())) return base.c_or_zero(verts);
  const std::string key = configuration_key(a, cell);
  auto it = extra.find(key);
  if (it != extra.end()) return it->second;
  if (floating_zero) return GradedTensor(base.basis, base.ring, verts, 3 - static_cast<int>(cell.size()));
  std::string names;
  for (int p : cell) names += (names.empty() ? "" : " ") + a.labels[p];
  throw Error("no operation for the configuration {" + names + "} (key " + key + ")");
}

AhatAlgebra strict_ahat(const CyclicAInfty& v) {
  if (!v.strict()) throw Error("strict_ahat needs a strict algebra");
  AhatAlgebra a;
  a.base = v;
  a.floating_zero = true;
  return a;
}

GradedTensor model2_Z(const PointConfiguration& a, const MarkedSubdivision& s, const AhatAlgebra& v) {
  if (a.d != 2) throw Error("model 2 needs a planar configuration");
  std::vector<GradedTensor> ops;
  ops.reserve(s.cells.size());
  std::map<std::pair<int, int>, std::vector<Leg>> legs;  // directed edge -> leg
  for (int c = 0; c < static_cast<int>(s.cells.size()); ++c) {
    ops.push_back(v.op_for_cell(a, s.cells[c]));
    auto h = rotated_hull(a, s.cells[c]);
    for (int p = 0; p < static_cast<int>(h.size()); ++p)
      legs[{h[p], h[(p + 1) % h.size()]}].push_back(Leg{c, p});
  }
  ContractionNetwork net;
  for (const auto& t : ops) net.nodes.push_back(&t);
  for (const auto& [e, l] : legs) {
    if (l.size() != 1) throw Error("edge used twice in one direction");
    if (e.first > e.second) continue;
    auto back = legs.find({e.second, e.first});
    if (back != legs.end()) net.edges.emplace_back(l[0], back->second[0]);
  }
  auto hull = rotated_hull(a, all_points(a));
  for (int p = 0; p < static_cast<int>(hull.size()); ++p) {
    auto it = legs.find({hull[p], hull[(p + 1) % hull.size()]});
    if (it == legs.end()) throw Error("hull edge missing from the subdivision");
    net.open.push_back(it->second[0]);
  }
  if (net.edges.size() * 2 + net.open.size() != [&] {
        std::size_t n = 0;
        for (const auto& t : ops) n += t.arity();
        return n;
      }())
    throw Error("subdivision cells do not glue along full edges");
  return contract(net, v.base.ginv);
}

namespace {

Model2Report run_model2(const SecondaryPolytope& sp, const AhatAlgebra& v, bool top_only) {
  const auto& a = sp.config;
  const bool signed_q = v.base.ring == Ring::Q;
  std::map<std::pair<int, int>, int> inc;
  if (signed_q) inc = face_incidences(sp);
  std::vector<std::optional<GradedTensor>> z(sp.faces.size());
  auto Z = [&](int f) -> const GradedTensor& {
    if (!z[f]) z[f] = model2_Z(a, sp.faces[f], v);
    return *z[f];
  };
  Model2Report rep;
  rep.checked.assign(sp.dim + 1, 0);
  for (int f = 0; f < static_cast<int>(sp.faces.size()); ++f) {
    if (top_only && f != sp.top) continue;
    GradedTensor lhs = apply_Q(Z(f), v.base.Q);
    GradedTensor defect = lhs;
    for (int g : sp.covers[f]) {
      int sign = signed_q ? inc.at({f, g}) : 1;
      defect = defect + Z(g).scaled(sign);
      if (f == sp.top) rep.top_terms.push_back(FaceTerm{describe(a, sp.faces[g]), sign, Z(g).is_zero()});
    }
    if (f == sp.top) rep.top_lhs_zero = lhs.is_zero();
    ++rep.checked[sp.face_dim[f]];
    if (defect.is_zero()) continue;
    ++rep.failure_count;
    if (rep.failures.size() < 5) rep.failures.push_back(describe(a, sp.faces[f]) + ": defect at " + entry_witness(defect));
  }
  if (rep.failure_count) rep.status = "fail";
  return rep;
}

}  // namespace

Model2Report model2_check(const SecondaryPolytope& sp, const AhatAlgebra& v) { return run_model2(sp, v, false); }

Model2Report verify_ahat_relation(const SecondaryPolytope& sp, const AhatAlgebra& v) { return run_model2(sp, v, true); }

MatrixSeries SP1Algebra::u(int n) const {
  if (n < static_cast<int>(U.size())) return U[n];
  return MatrixSeries(dim(), order);
}

namespace {

MatrixSeries commutator(const MatrixSeries& x, int dx, const MatrixSeries& y, int dy) {
  MatrixSeries r = x * y;
  MatrixSeries s = y * x;
  return (dx * dy) % 2 ? r + s : r - s;
}

std::string degree_problem(const std::vector<int>& deg, const Matrix& m, int degree, const std::string& name) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && deg[i] - deg[j] != degree)
        return name + " entry (" + std::to_string(i) + "," + std::to_string(j) + ") breaks degree " +
               std::to_string(degree);
  return {};
}

std::string series_witness(const MatrixSeries& d) {
  auto w = d.first_nonzero();
  return "T^" + std::to_string(w.k) + " entry (" + std::to_string(w.row) + "," + std::to_string(w.col) +
         ") = " + to_string(w.value);
}

void check_square(const Matrix& m, int dim, const std::string& name) {
  if (m.rows() != dim || m.cols() != dim) throw Error(name + " must be " + std::to_string(dim) + "x" + std::to_string(dim));
}

}  // namespace

SP1Report sp1_verify(const SP1Algebra& a, int n_max) {
  check_square(a.Q, a.dim(), "Q");
  if (a.Q.ring() != Ring::Q) throw Error("SP1 algebras are defined over Q");
  SP1Report rep;
  auto fail = [&](int n, std::string w) {
    if (rep.failing_n < 0) {
      rep.failing_n = n;
      rep.witness = std::move(w);
    }
    rep.status = "fail";
  };
  if (!(a.Q * a.Q).is_zero()) fail(-1, "Q^2 != 0");
  if (auto p = degree_problem(a.degrees, a.Q, 1, "Q"); !p.empty()) fail(-1, p);
  for (int n = 0; n < static_cast<int>(a.U.size()); ++n)
    for (int k = 0; k <= a.order; ++k)
      if (auto p = degree_problem(a.degrees, a.U[n].coeff(k), -n, "U_" + std::to_string(n)); !p.empty()) fail(-1, p);
  const MatrixSeries q = MatrixSeries::constant(a.Q, a.order);
  for (int n = 0; n <= n_max; ++n) {
    MatrixSeries lhs = commutator(q, 1, a.u(n), -n);
    MatrixSeries rhs(a.dim(), a.order);
    for (int i = 0; i < n; ++i) {
      MatrixSeries t = a.u(i) * a.u(n - 1 - i) - a.u(n - 1);
      rhs = i % 2 ? rhs - t : rhs + t;
    }
    MatrixSeries d = lhs - rhs;
    rep.per_n.emplace_back(n, d.is_zero());
    if (!d.is_zero()) fail(n, "n = " + std::to_string(n) + ": " + series_witness(d));
  }
  return rep;
}

SP1Algebra sp1_from_continuum(const std::vector<int>& degrees, const Matrix& q, const Matrix& g, int order) {
  const int n = static_cast<int>(degrees.size());
  check_square(q, n, "Q");
  check_square(g, n, "G");
  if (q.ring() != Ring::Q || g.ring() != Ring::Q) throw Error("the continuum construction is over Q");
  if (!(q * q).is_zero()) throw Error("Q^2 != 0");
  if (!(g * g).is_zero()) throw Error("G^2 != 0");
  if (auto p = degree_problem(degrees, q, 1, "Q"); !p.empty()) throw Error(p);
  if (auto p = degree_problem(degrees, g, -1, "G"); !p.empty()) throw Error(p);
  Matrix h = q * g + g * q;
  SP1Algebra a;
  a.degrees = degrees;
  a.Q = q;
  a.order = order;
  a.U = {MatrixSeries::exp_t(h, order), MatrixSeries::divided_difference(h, order).left(g)};
  return a;
}

SP1Report infinitesimal_sp1_verify(const std::vector<int>& degrees, const Matrix& q, const std::vector<Matrix>& g,
                                   int n_max) {
  const int dim = static_cast<int>(degrees.size());
  check_square(q, dim, "Q");
  if (q.ring() == Ring::GF2) throw Error("infinitesimal SP1 relations need characteristic 0");
  for (std::size_t i = 0; i < g.size(); ++i) {
    check_square(g[i], dim, "G_" + std::to_string(i));
    if (g[i].ring() == Ring::GF2) throw Error("infinitesimal SP1 relations need characteristic 0");
  }
  auto G = [&](int m) {
    return MatrixSeries::constant(m < static_cast<int>(g.size()) ? g[m] : Matrix(Ring::Q, dim, dim), 0);
  };
  auto br = [&](int i, int j) { return commutator(G(i), -i, G(j), -j); };
  const MatrixSeries qs = MatrixSeries::constant(q, 0);
  SP1Report rep;
  for (int i = 0; i < static_cast<int>(g.size()); ++i)
    if (auto p = degree_problem(degrees, g[i], -i, "G_" + std::to_string(i)); !p.empty()) {
      rep.status = "fail";
      rep.witness = p;
      return rep;
    }
  for (int m = 0; m <= n_max; ++m) {
    MatrixSeries lhs = commutator(qs, 1, G(m), -m);
    MatrixSeries rhs(dim, 0);
    if (m % 2 == 0) {
      const int k = m / 2;
      for (int i = 0; i < k; ++i) rhs = i % 2 ? rhs - br(i, m - i - 1) : rhs + br(i, m - i - 1);
    } else {
      const int k = m / 4;
      rhs = G(m - 1);
      for (int i = 0; i < k; ++i)
        rhs = rhs - (m % 4 == 1 ? br(2 * i + 1, 4 * k - 2 * i - 1) : br(2 * i + 1, 4 * k - 2 * i + 1));
      if (m % 4 == 3) rhs = rhs - br(2 * k + 1, 2 * k + 1).scaled(Rational(1, 2));
    }
    MatrixSeries d = lhs - rhs;
    rep.per_n.emplace_back(m, d.is_zero());
    if (!d.is_zero() && rep.failing_n < 0) {
      rep.status = "fail";
      rep.failing_n = m;
      auto w = d.first_nonzero();
      rep.witness = "[Q,G_" + std::to_string(m) + "] entry (" + std::to_string(w.row) + "," + std::to_string(w.col) +
                    ") off by " + to_string(w.value);
    }
  }
  return rep;
}

MatrixSeries htqm_Z(const PointConfiguration& a, const MarkedSubdivision& s, const SP1Algebra& alg) {
  if (a.d != 1) throw Error("the cube model needs points on a line");
  auto cells = s.cells;
  std::sort(cells.begin(), cells.end(), [&](const auto& x, const auto& y) {
    return a.coords[cell_vertices(a, x)[0]] < a.coords[cell_vertices(a, y)[0]];
  });
  MatrixSeries z = MatrixSeries::identity(alg.dim(), alg.order);
  for (const auto& c : cells) z = z * alg.u(static_cast<int>(c.size()) - 2);
  return z;
}

HtqmReport htqm_check(const SecondaryPolytope& sp, const SP1Algebra& alg) {
  const auto& a = sp.config;
  if (a.d != 1) throw Error("the cube model needs points on a line");
  HtqmReport rep;
  const MatrixSeries q = MatrixSeries::constant(alg.Q, alg.order);
  auto x = [&](int p) { return a.coords[p][0]; };
  for (const auto& face : sp.faces) {
    ++rep.faces;
    auto cells = face.cells;
    std::sort(cells.begin(), cells.end(),
              [&](const auto& u, const auto& w) { return x(cell_vertices(a, u)[0]) < x(cell_vertices(a, w)[0]); });
    int total = 0;
    for (const auto& c : cells) total += static_cast<int>(c.size()) - 2;
    MatrixSeries z = htqm_Z(a, face, alg);
    MatrixSeries defect = commutator(q, 1, z, -total);
    int p = 0;
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      auto fl = floating_points(a, cells[ci]);
      std::sort(fl.begin(), fl.end(), [&](int i, int j) { return x(i) < x(j); });
      for (int f : fl) {
        MarkedSubdivision brk, omit;
        for (std::size_t cj = 0; cj < cells.size(); ++cj) {
          if (cj != ci) {
            brk.cells.push_back(cells[cj]);
            omit.cells.push_back(cells[cj]);
            continue;
          }
          std::vector<int> lo, hi, rest;
          for (int pt : cells[cj]) {
            if (x(pt) <= x(f)) lo.push_back(pt);
            if (x(pt) >= x(f)) hi.push_back(pt);
            if (pt != f) rest.push_back(pt);
          }
          brk.cells.push_back(lo);
          brk.cells.push_back(hi);
          omit.cells.push_back(rest);
        }
        for (auto* m : {&brk, &omit}) {
          for (auto& c : m->cells) std::sort(c.begin(), c.end());
          std::sort(m->cells.begin(), m->cells.end());
          if (sp.find(*m) < 0) throw Error("facet " + describe(a, *m) + " missing from the cube");
        }
        MatrixSeries t = htqm_Z(a, brk, alg) - htqm_Z(a, omit, alg);
        defect = p % 2 ? defect + t : defect - t;
        ++p;
      }
    }
    if (defect.is_zero()) continue;
    ++rep.failure_count;
    if (rep.failures.size() < 5) rep.failures.push_back(describe(a, face) + ": " + series_witness(defect));
  }
  if (rep.failure_count) rep.status = "fail";
  return rep;
}

}  // namespace pachner
