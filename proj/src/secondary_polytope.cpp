#include "pachner/secondary_polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pachner/matrix.hpp"

namespace pachner {

namespace {

using Pt = std::vector<Rational>;

int orient(const Pt& p, const Pt& q, const Pt& r) {
  return sgn((q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]));
}

Rational area2(const Pt& p, const Pt& q, const Pt& r) {
  return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
}

// Counter-clockwise hull vertices of the given indices, starting at the smallest index.
std::vector<int> hull2(const PointConfiguration& a, std::vector<int> idx) {
  std::sort(idx.begin(), idx.end(), [&](int i, int j) { return a.coords[i] < a.coords[j]; });
  std::vector<int> h;
  for (int pass = 0; pass < 2; ++pass) {
    std::size_t base = h.size();
    for (int i : idx) {
      while (h.size() >= base + 2 && orient(a.coords[h[h.size() - 2]], a.coords[h.back()], a.coords[i]) <= 0)
        h.pop_back();
      h.push_back(i);
    }
    h.pop_back();
    std::reverse(idx.begin(), idx.end());
  }
  if (h.empty()) return h;
  auto m = std::min_element(h.begin(), h.end());
  std::rotate(h.begin(), m, h.end());
  return h;
}

bool strictly_inside(const PointConfiguration& a, const std::vector<int>& poly, int p) {
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (orient(a.coords[poly[i]], a.coords[poly[(i + 1) % poly.size()]], a.coords[p]) <= 0) return false;
  return true;
}

// Interiors of two convex polygons are disjoint iff some edge line separates them.
bool interiors_disjoint(const PointConfiguration& a, const std::vector<int>& p, const std::vector<int>& q) {
  auto separates = [&](const std::vector<int>& e, const std::vector<int>& other) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Pt& u = a.coords[e[i]];
      const Pt& v = a.coords[e[(i + 1) % e.size()]];
      bool ok = true;
      for (int o : other)
        if (orient(u, v, a.coords[o]) > 0) {
          ok = false;
          break;
        }
      if (ok) return true;
    }
    return false;
  };
  return separates(p, q) || separates(q, p);
}

std::vector<Rational> barycentric(const PointConfiguration& a, const std::vector<int>& basis, int p) {
  const int d = a.d;
  Matrix m(Ring::Q, d + 1, d + 1);
  std::vector<Rational> rhs(d + 1);
  for (int j = 0; j <= d; ++j) {
    m.set(0, j, 1);
    for (int c = 0; c < d; ++c) m.set(c + 1, j, a.coords[basis[j]][c]);
  }
  rhs[0] = 1;
  for (int c = 0; c < d; ++c) rhs[c + 1] = a.coords[p][c];
  auto x = solve(m, rhs);
  if (!x) throw Error("degenerate affine basis");
  return *x;
}

std::vector<int> affine_basis(const PointConfiguration& a, const std::vector<int>& pts) {
  std::vector<int> b;
  for (int p : pts) {
    if (b.empty()) {
      b.push_back(p);
    } else if (a.d == 1) {
      if (a.coords[p][0] != a.coords[b[0]][0]) b.push_back(p);
    } else if (b.size() == 1) {
      if (a.coords[p] != a.coords[b[0]]) b.push_back(p);
    } else if (orient(a.coords[b[0]], a.coords[b[1]], a.coords[p]) != 0) {
      b.push_back(p);
    }
    if (static_cast<int>(b.size()) == a.d + 1) return b;
  }
  throw Error("points do not span R^" + std::to_string(a.d));
}

Rational det(std::vector<std::vector<Rational>> m) {
  const int n = static_cast<int>(m.size());
  Rational r = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && is_zero(m[p][c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      r = -r;
    }
    r *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (is_zero(m[i][c])) continue;
      Rational f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return r;
}

}  // namespace

void check_general_position(const PointConfiguration& a) {
  if (a.d != 1 && a.d != 2) throw Error("dimension must be 1 or 2");
  if (static_cast<int>(a.coords.size()) != a.size()) throw Error("coordinate count mismatch");
  std::set<std::string> seen;
  for (int i = 0; i < a.size(); ++i) {
    if (!seen.insert(a.labels[i]).second) throw Error("duplicate label " + a.labels[i]);
    if (static_cast<int>(a.coords[i].size()) != a.d) throw Error("point " + a.labels[i] + " has the wrong dimension");
  }
  if (a.size() < a.d + 1) throw Error("too few points to span R^" + std::to_string(a.d));
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j) {
      if (a.coords[i] == a.coords[j]) throw Error("points " + a.labels[i] + " and " + a.labels[j] + " coincide");
      if (a.d == 2)
        for (int k = j + 1; k < a.size(); ++k)
          if (orient(a.coords[i], a.coords[j], a.coords[k]) == 0)
            throw Error("points " + a.labels[i] + ", " + a.labels[j] + ", " + a.labels[k] + " are collinear");
    }
}

std::vector<int> cell_vertices(const PointConfiguration& a, const std::vector<int>& cell) {
  if (a.d == 1) {
    auto [lo, hi] = std::minmax_element(cell.begin(), cell.end(),
                                        [&](int i, int j) { return a.coords[i][0] < a.coords[j][0]; });
    return {*lo, *hi};
  }
  return hull2(a, cell);
}

std::vector<int> floating_points(const PointConfiguration& a, const std::vector<int>& cell) {
  auto v = cell_vertices(a, cell);
  std::vector<int> out;
  for (int p : cell)
    if (std::find(v.begin(), v.end(), p) == v.end()) out.push_back(p);
  return out;
}

int face_dimension(const PointConfiguration& a, const MarkedSubdivision& s) {
  int dim = 0;
  for (const auto& c : s.cells) dim += static_cast<int>(c.size()) - a.d - 1;
  return dim;
}

bool is_triangulation(const PointConfiguration& a, const MarkedSubdivision& s) {
  for (const auto& c : s.cells)
    if (static_cast<int>(c.size()) != a.d + 1) return false;
  return true;
}

bool refines(const MarkedSubdivision& fine, const MarkedSubdivision& coarse) {
  for (const auto& f : fine.cells) {
    bool found = false;
    for (const auto& c : coarse.cells)
      if (std::includes(c.begin(), c.end(), f.begin(), f.end())) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

std::string describe(const PointConfiguration& a, const MarkedSubdivision& s) {
  std::string out;
  for (const auto& c : s.cells) {
    auto fl = floating_points(a, c);
    out += out.empty() ? "[" : " [";
    bool first = true;
    for (int p : cell_vertices(a, c)) {
      out += (first ? "" : " ") + a.labels[p];
      first = false;
    }
    if (!fl.empty()) {
      out += " |";
      for (int p : fl) out += " " + a.labels[p];
    }
    out += "]";
  }
  return out;
}

std::vector<MarkedSubdivision> enumerate_subdivisions(const PointConfiguration& a) {
  check_general_position(a);
  const int n = a.size();
  if (n > 8) throw Error("subdivision enumeration is capped at 8 points");
  std::set<MarkedSubdivision> out;
  auto add_floating = [&](const std::vector<std::vector<int>>& polys) {
    std::vector<int> used(n, 0);
    for (const auto& p : polys)
      for (int v : p) used[v] = 1;
    std::vector<std::pair<int, int>> free;  // (point, polygon)
    for (int p = 0; p < n; ++p) {
      if (used[p]) continue;
      for (int i = 0; i < static_cast<int>(polys.size()); ++i)
        if (a.d == 1 ? (a.coords[p][0] > a.coords[polys[i][0]][0] && a.coords[p][0] < a.coords[polys[i][1]][0])
                     : strictly_inside(a, polys[i], p)) {
          free.emplace_back(p, i);
          break;
        }
    }
    for (long mask = 0; mask < (1L << free.size()); ++mask) {
      MarkedSubdivision s;
      for (const auto& p : polys) {
        std::vector<int> c(p.begin(), p.end());
        s.cells.push_back(c);
      }
      for (std::size_t f = 0; f < free.size(); ++f)
        if (mask >> f & 1) s.cells[free[f].second].push_back(free[f].first);
      for (auto& c : s.cells) std::sort(c.begin(), c.end());
      std::sort(s.cells.begin(), s.cells.end());
      out.insert(s);
    }
  };
  if (a.d == 1) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a.coords[i][0] < a.coords[j][0]; });
    const int inner = n - 2;
    for (long mask = 0; mask < (1L << inner); ++mask) {
      std::vector<int> breaks{order[0]};
      for (int i = 0; i < inner; ++i)
        if (mask >> i & 1) breaks.push_back(order[i + 1]);
      breaks.push_back(order[n - 1]);
      std::vector<std::vector<int>> polys;
      for (std::size_t i = 0; i + 1 < breaks.size(); ++i) polys.push_back({breaks[i], breaks[i + 1]});
      add_floating(polys);
    }
    return {out.begin(), out.end()};
  }
  // Convex-position subsets as candidate polygons, indexed by directed edge.
  std::vector<std::vector<int>> polys;
  std::map<std::pair<int, int>, std::vector<int>> by_edge;
  for (long mask = 0; mask < (1L << n); ++mask) {
    if (__builtin_popcountl(mask) < 3) continue;
    std::vector<int> pts;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) pts.push_back(i);
    auto h = hull2(a, pts);
    if (h.size() != pts.size()) continue;
    const int id = static_cast<int>(polys.size());
    polys.push_back(h);
    for (std::size_t i = 0; i < h.size(); ++i) by_edge[{h[i], h[(i + 1) % h.size()]}].push_back(id);
  }
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  auto hull = hull2(a, all);
  std::set<std::pair<int, int>> frontier;
  for (std::size_t i = 0; i < hull.size(); ++i) frontier.insert({hull[i], hull[(i + 1) % hull.size()]});
  std::vector<int> chosen;
  std::function<void(const std::set<std::pair<int, int>>&)> rec = [&](const std::set<std::pair<int, int>>& fr) {
    if (fr.empty()) {
      std::vector<std::vector<int>> ps;
      for (int c : chosen) ps.push_back(polys[c]);
      add_floating(ps);
      return;
    }
    auto e = *fr.begin();
    auto it = by_edge.find(e);
    if (it == by_edge.end()) return;
    for (int cand : it->second) {
      bool ok = true;
      for (int c : chosen)
        if (!interiors_disjoint(a, polys[c], polys[cand])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      auto nf = fr;
      const auto& p = polys[cand];
      for (std::size_t i = 0; i < p.size(); ++i) {
        std::pair<int, int> f{p[i], p[(i + 1) % p.size()]};
        if (nf.erase(f) == 0) nf.insert({f.second, f.first});
      }
      chosen.push_back(cand);
      rec(nf);
      chosen.pop_back();
    }
  };
  rec(frontier);
  return {out.begin(), out.end()};
}

RegularityResult is_regular(const PointConfiguration& a, const MarkedSubdivision& s, LpMethod method) {
  const int n = a.size();
  std::vector<LinearConstraint> rows;
  auto lift_row = [&](const std::vector<int>& basis, int p, LinearConstraint::Kind kind) {
    LinearConstraint r{std::vector<Rational>(n), 0, kind};
    auto lam = barycentric(a, basis, p);
    r.a[p] += 1;
    for (std::size_t j = 0; j < basis.size(); ++j) r.a[basis[j]] -= lam[j];
    rows.push_back(r);
  };
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  for (int p : affine_basis(a, all)) {
    LinearConstraint g{std::vector<Rational>(n), 0, LinearConstraint::EQ};
    g.a[p] = 1;
    rows.push_back(g);
  }
  for (const auto& cell : s.cells) {
    auto basis = affine_basis(a, cell);
    for (int p = 0; p < n; ++p) {
      bool in_cell = std::binary_search(cell.begin(), cell.end(), p);
      if (in_cell && std::find(basis.begin(), basis.end(), p) != basis.end()) continue;
      lift_row(basis, p, in_cell ? LinearConstraint::EQ : LinearConstraint::GT);
    }
  }
  MarginResult m = method == LpMethod::FourierMotzkin ? fm_max_margin(n, rows) : simplex_max_margin(n, rows);
  RegularityResult r;
  r.regular = m.feasible;
  if (r.regular) {
    r.heights = m.x;
    r.margin = m.margin;
  }
  return r;
}

MarkedSubdivision subdivision_from_heights(const PointConfiguration& a, const std::vector<Rational>& w) {
  const int n = a.size();
  std::set<std::vector<int>> cells;
  auto consider = [&](const std::vector<int>& basis) {
    std::vector<int> cell;
    for (int p = 0; p < n; ++p) {
      auto lam = barycentric(a, basis, p);
      Rational f = 0;
      for (std::size_t j = 0; j < basis.size(); ++j) f += lam[j] * w[basis[j]];
      int c = cmp(w[p], f);
      if (c < 0) return;
      if (c == 0) cell.push_back(p);
    }
    cells.insert(cell);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a.d == 1) {
        consider({i, j});
        continue;
      }
      for (int k = j + 1; k < n; ++k)
        if (orient(a.coords[i], a.coords[j], a.coords[k]) != 0) consider({i, j, k});
    }
  return MarkedSubdivision{{cells.begin(), cells.end()}};
}

std::vector<Rational> gkz_vector(const PointConfiguration& a, const MarkedSubdivision& t) {
  if (!is_triangulation(a, t)) throw Error("GKZ vectors are defined for triangulations");
  std::vector<Rational> phi(a.size(), 0);
  for (const auto& c : t.cells) {
    Rational vol = a.d == 1 ? Rational(abs(a.coords[c[1]][0] - a.coords[c[0]][0]))
                            : Rational(abs(area2(a.coords[c[0]], a.coords[c[1]], a.coords[c[2]])) / 2);
    for (int p : c) phi[p] += vol;
  }
  return phi;
}

std::vector<Rational> reduce_affine(const PointConfiguration& a, const std::vector<Rational>& v, Complement how) {
  const int n = a.size(), d = a.d;
  Matrix m(Ring::Q, n, d + 1);
  for (int i = 0; i < n; ++i) {
    m.set(i, 0, 1);
    for (int c = 0; c < d; ++c) m.set(i, c + 1, a.coords[i][c]);
  }
  std::vector<Rational> f;
  std::vector<int> basis;
  if (how == Complement::LeastSquares) {
    Matrix mt = m.transposed();
    std::vector<Rational> rhs(d + 1, 0);
    for (int r = 0; r <= d; ++r)
      for (int i = 0; i < n; ++i) rhs[r] += mt(r, i) * v[i];
    auto s = solve(mt * m, rhs);
    if (!s) throw Error("least-squares system is singular");
    f = *s;
  } else {
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    basis = affine_basis(a, all);
    Matrix mb(Ring::Q, d + 1, d + 1);
    std::vector<Rational> rhs(d + 1);
    for (int j = 0; j <= d; ++j) {
      for (int c = 0; c <= d; ++c) mb.set(j, c, m(basis[j], c));
      rhs[j] = v[basis[j]];
    }
    f = *solve(mb, rhs);
  }
  std::vector<Rational> out;
  for (int i = 0; i < n; ++i) {
    if (std::find(basis.begin(), basis.end(), i) != basis.end()) continue;
    Rational r = v[i];
    for (int c = 0; c <= d; ++c) r -= m(i, c) * f[c];
    out.push_back(r);
  }
  return out;
}

std::vector<int> hull_vertices(const std::vector<std::vector<Rational>>& pts) {
  std::vector<int> out;
  const int n = static_cast<int>(pts.size());
  if (n == 0) return out;
  const int dim = static_cast<int>(pts[0].size());
  for (int i = 0; i < n; ++i) {
    std::vector<int> others;
    for (int j = 0; j < n; ++j)
      if (pts[j] != pts[i]) others.push_back(j);
    if (others.empty()) {
      out.push_back(i);
      continue;
    }
    const int k = static_cast<int>(others.size());
    Matrix m(Ring::Q, dim + 1, k);
    std::vector<Rational> b(dim + 1);
    for (int j = 0; j < k; ++j) {
      m.set(0, j, 1);
      for (int c = 0; c < dim; ++c) m.set(c + 1, j, pts[others[j]][c]);
    }
    b[0] = 1;
    for (int c = 0; c < dim; ++c) b[c + 1] = pts[i][c];
    if (simplex_standard(m, b, std::vector<Rational>(k, 0)).status == LpStatus::Infeasible) out.push_back(i);
  }
  return out;
}

std::vector<long> SecondaryPolytope::fvector() const {
  std::vector<long> f(dim + 1, 0);
  for (int d : face_dim) ++f[d];
  return f;
}

std::vector<int> SecondaryPolytope::coarse() const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i)
    if (face_dim[i] == dim - 1) out.push_back(i);
  return out;
}

int SecondaryPolytope::find(const MarkedSubdivision& s) const {
  auto it = std::find(faces.begin(), faces.end(), s);
  return it == faces.end() ? -1 : static_cast<int>(it - faces.begin());
}

SecondaryPolytope build_sp(const PointConfiguration& a) {
  SecondaryPolytope sp;
  sp.config = a;
  sp.dim = a.size() - a.d - 1;
  auto subs = enumerate_subdivisions(a);
  sp.subdivisions_total = static_cast<long>(subs.size());
  std::vector<MarkedSubdivision> triangulations;
  for (const auto& s : subs) {
    if (is_triangulation(a, s)) triangulations.push_back(s);
    auto r = is_regular(a, s);
    if (!r.regular) continue;
    if (!(subdivision_from_heights(a, r.heights) == s))
      throw Error("regularity witness does not reproduce " + describe(a, s));
    sp.faces.push_back(s);
    sp.face_dim.push_back(face_dimension(a, s));
    sp.heights.push_back(r.heights);
    if (sp.face_dim.back() == sp.dim) sp.top = static_cast<int>(sp.faces.size()) - 1;
  }
  sp.triangulations_total = static_cast<long>(triangulations.size());
  for (int i = 0; i < static_cast<int>(sp.faces.size()); ++i)
    if (sp.face_dim[i] == 0) {
      sp.vertices.push_back(i);
      sp.gkz.push_back(gkz_vector(a, sp.faces[i]));
    }
  std::set<MarkedSubdivision> regular_t;
  for (int v : sp.vertices) regular_t.insert(sp.faces[v]);
  sp.hull_agrees = true;
  for (Complement how : {Complement::LeastSquares, Complement::AffineBasis}) {
    std::vector<std::vector<Rational>> pts;
    for (const auto& t : triangulations) pts.push_back(reduce_affine(a, gkz_vector(a, t), how));
    std::set<MarkedSubdivision> hv;
    for (int i : hull_vertices(pts)) hv.insert(triangulations[i]);
    sp.hull_agrees = sp.hull_agrees && hv == regular_t;
  }
  sp.covers.assign(sp.faces.size(), {});
  for (int i = 0; i < static_cast<int>(sp.faces.size()); ++i)
    for (int j = 0; j < static_cast<int>(sp.faces.size()); ++j)
      if (sp.face_dim[j] == sp.face_dim[i] - 1 && refines(sp.faces[j], sp.faces[i])) sp.covers[i].push_back(j);
  return sp;
}

std::map<std::pair<int, int>, int> face_incidences(const SecondaryPolytope& sp) {
  const auto& a = sp.config;
  const int nf = static_cast<int>(sp.faces.size());
  std::vector<std::vector<Rational>> coord(sp.vertices.size());
  for (std::size_t v = 0; v < sp.vertices.size(); ++v)
    coord[v] = reduce_affine(a, sp.gkz[v], Complement::AffineBasis);
  const int amb = static_cast<int>(coord.empty() ? 0 : coord[0].size());
  std::vector<std::vector<int>> verts(nf);
  std::vector<std::vector<std::vector<Rational>>> basis(nf);
  auto diff = [](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    std::vector<Rational> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
  };
  auto rank_of = [&](const std::vector<std::vector<Rational>>& vs) {
    if (vs.empty()) return 0;
    Matrix m(Ring::Q, static_cast<int>(vs.size()), amb);
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
      for (int c = 0; c < amb; ++c) m.set(i, c, vs[i][c]);
    return row_reduce(m).rank;
  };
  for (int f = 0; f < nf; ++f) {
    for (std::size_t v = 0; v < sp.vertices.size(); ++v)
      if (refines(sp.faces[sp.vertices[v]], sp.faces[f])) verts[f].push_back(static_cast<int>(v));
    for (std::size_t i = 1; i < verts[f].size(); ++i) {
      auto cand = basis[f];
      cand.push_back(diff(coord[verts[f][i]], coord[verts[f][0]]));
      if (rank_of(cand) > static_cast<int>(basis[f].size())) basis[f] = cand;
    }
    if (static_cast<int>(basis[f].size()) != sp.face_dim[f])
      throw Error("face " + describe(a, sp.faces[f]) + " spans the wrong dimension");
  }
  std::map<std::pair<int, int>, int> inc;
  for (int f = 0; f < nf; ++f) {
    const int k = sp.face_dim[f];
    for (int g : sp.covers[f]) {
      int outside = -1;
      for (int v : verts[f])
        if (std::find(verts[g].begin(), verts[g].end(), v) == verts[g].end()) {
          outside = v;
          break;
        }
      std::vector<std::vector<Rational>> cols{diff(coord[verts[g][0]], coord[outside])};
      for (const auto& b : basis[g]) cols.push_back(b);
      Matrix bm(Ring::Q, amb, k);
      for (int j = 0; j < k; ++j)
        for (int c = 0; c < amb; ++c) bm.set(c, j, basis[f][j][c]);
      std::vector<std::vector<Rational>> m(k, std::vector<Rational>(k));
      for (int j = 0; j < k; ++j) {
        auto x = solve(bm, cols[j]);
        if (!x) throw Error("facet direction outside its face");
        for (int i = 0; i < k; ++i) m[i][j] = (*x)[i];
      }
      inc[{f, g}] = sgn(det(m));
    }
  }
  return inc;
}

PointConfiguration points_on_line(const std::vector<Rational>& xs) {
  PointConfiguration a;
  a.d = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    a.labels.push_back("a" + std::to_string(i));
    a.coords.push_back({xs[i]});
  }
  return a;
}

PointConfiguration make_configuration(const std::vector<std::pair<Rational, Rational>>& xy) {
  PointConfiguration a;
  a.d = 2;
  for (std::size_t i = 0; i < xy.size(); ++i) {
    a.labels.push_back("a" + std::to_string(i));
    a.coords.push_back({xy[i].first, xy[i].second});
  }
  return a;
}

}  // namespace pachner
