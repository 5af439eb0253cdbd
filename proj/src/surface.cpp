#include "pachner/surface.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace pachner {

int Surface::prev(int d) const {
  int x = d;
  while (next[x] != d) x = next[x];
  return x;
}

std::vector<std::vector<int>> Surface::faces() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(darts(), 0);
  for (int d = 0; d < darts(); ++d) {
    if (seen[d] || is_hole(d)) continue;
    std::vector<int> f;
    int x = d;
    do {
      seen[x] = 1;
      f.push_back(x);
      x = next[x];
    } while (x != d);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> Surface::face_index() const {
  std::vector<int> idx(darts(), -1);
  auto fs = faces();
  for (int i = 0; i < static_cast<int>(fs.size()); ++i)
    for (int d : fs[i]) idx[d] = i;
  return idx;
}

std::vector<int> Surface::face_profile() const {
  std::vector<int> p;
  for (const auto& f : faces()) p.push_back(static_cast<int>(f.size()));
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<BoundaryLeg> Surface::circle_legs(int c) const {
  std::vector<BoundaryLeg> legs;
  const int start = circles.at(c).base;
  int r = start;
  int pos = 0;
  do {
    legs.push_back({r, c, pos++, label[r], label[next[r]]});
    r = inv[prev(inv[r])];
    if (pos > darts()) throw Error("corrupt boundary circle");
  } while (r != start);
  return legs;
}

std::vector<std::string> Surface::circle_labels(int c) const {
  std::vector<std::string> out;
  for (const auto& l : circle_legs(c)) out.push_back(l.from);
  return out;
}

std::vector<BoundaryLeg> Surface::boundary_legs() const {
  std::vector<BoundaryLeg> out;
  for (int pass = 0; pass < 2; ++pass) {
    for (int c = 0; c < static_cast<int>(circles.size()); ++c) {
      if (circles[c].out != (pass == 1)) continue;
      auto legs = circle_legs(c);
      out.insert(out.end(), legs.begin(), legs.end());
    }
  }
  return out;
}

namespace {

std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size(), -1);
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

// Vertex id per dart: orbits of d -> inv(prev(d)).
std::vector<int> vertex_ids(const Surface& s, int* count) {
  const int n = s.darts();
  std::vector<int> pv = inverse_perm(s.next);
  std::vector<int> v(n, -1);
  int k = 0;
  for (int d = 0; d < n; ++d) {
    if (v[d] >= 0) continue;
    int x = d;
    int guard = 0;
    while (v[x] < 0 && guard++ <= n) {
      v[x] = k;
      x = s.inv[pv[x]];
    }
    ++k;
  }
  if (count) *count = k;
  return v;
}

}  // namespace

int Surface::vertex_count() const {
  int k = 0;
  vertex_ids(*this, &k);
  return k;
}

int Surface::edge_count() const {
  int e = 0;
  for (int d = 0; d < darts(); ++d) {
    if (is_hole(d)) continue;
    if (is_hole(inv[d]) || d < inv[d]) ++e;
  }
  return e;
}

int Surface::euler_characteristic() const {
  return vertex_count() - edge_count() + static_cast<int>(faces().size());
}

int Surface::cell_dimension() const {
  int dim = 0;
  for (const auto& f : faces()) dim += static_cast<int>(f.size()) - 3;
  return dim;
}

bool Surface::is_triangulation() const { return cell_dimension() == 0; }

SurfaceReport Surface::validate() const {
  SurfaceReport r;
  auto fail = [&](std::string msg) {
    r.ok = false;
    r.errors.push_back(std::move(msg));
  };
  const int n = darts();
  if (static_cast<int>(inv.size()) != n || static_cast<int>(hole.size()) != n ||
      static_cast<int>(label.size()) != n) {
    fail("array sizes differ");
    return r;
  }
  std::vector<int> hits(n, 0);
  for (int d = 0; d < n; ++d) {
    if (next[d] < 0 || next[d] >= n || inv[d] < 0 || inv[d] >= n) {
      fail("dart " + std::to_string(d) + " points out of range");
      return r;
    }
    ++hits[next[d]];
  }
  for (int d = 0; d < n; ++d) {
    if (hits[d] != 1) {
      fail("face successor is not a permutation");
      return r;
    }
    if (inv[d] == d || inv[inv[d]] != d) {
      fail("involution broken at dart " + std::to_string(d));
      return r;
    }
  }
  const int nc = static_cast<int>(circles.size());
  for (int d = 0; d < n; ++d) {
    if (hole[d] >= nc) fail("dart " + std::to_string(d) + " names a missing circle");
    if (is_hole(d) && is_hole(inv[d])) fail("two hole darts paired at " + std::to_string(d));
    if (is_hole(d) != is_hole(next[d]) || (is_hole(d) && hole[d] != hole[next[d]]))
      fail("hole cycle mixes with a face at dart " + std::to_string(d));
    if (label[inv[d]] != label[next[d]]) fail("labels disagree across edge at dart " + std::to_string(d));
  }
  if (!r.ok) return r;
  for (int c = 0; c < nc; ++c) {
    int b = circles[c].base;
    if (b < 0 || b >= n || is_hole(b) || hole[inv[b]] != c) {
      fail("circle " + std::to_string(c) + " has an invalid base dart");
      continue;
    }
    int count = 0;
    for (int d = 0; d < n; ++d) count += hole[d] == c;
    int cyc = 0;
    int x = inv[b];
    do {
      ++cyc;
      x = next[x];
    } while (x != inv[b] && cyc <= n);
    if (cyc != count) fail("circle " + std::to_string(c) + " is not a single cycle");
  }
  int nv = 0;
  auto vid = vertex_ids(*this, &nv);
  std::map<std::string, int> vertex_of_label;
  std::vector<std::string> vlabel(nv);
  std::vector<char> vset(nv, 0);
  for (int d = 0; d < n; ++d) {
    int v = vid[d];
    if (!vset[v]) {
      vset[v] = 1;
      vlabel[v] = label[d];
    } else if (vlabel[v] != label[d]) {
      fail("vertex carries two labels: " + vlabel[v] + ", " + label[d]);
    }
  }
  for (int v = 0; v < nv; ++v) {
    auto [it, inserted] = vertex_of_label.emplace(vlabel[v], v);
    if (!inserted) fail("label " + vlabel[v] + " used by two vertices");
  }
  for (const auto& f : faces()) {
    if (f.size() < 3) fail("face < 3 at dart " + std::to_string(f[0]));
  }
  if (n > 0) {
    std::vector<char> seen(n, 0);
    std::deque<int> q{0};
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
      int d = q.front();
      q.pop_front();
      for (int x : {next[d], inv[d]}) {
        if (!seen[x]) {
          seen[x] = 1;
          ++reached;
          q.push_back(x);
        }
      }
    }
    if (reached != n) fail("surface is not connected");
  }
  r.vertices = nv;
  r.edges = edge_count();
  r.faces = static_cast<int>(faces().size());
  r.chi = r.vertices - r.edges + r.faces;
  r.face_profile = face_profile();
  int twice_genus = 2 - nc - r.chi;
  if (twice_genus < 0 || twice_genus % 2 != 0)
    fail("Euler characteristic " + std::to_string(r.chi) + " is impossible with " + std::to_string(nc) + " circles");
  else
    r.genus = twice_genus / 2;
  return r;
}

namespace {

void put_int(std::string& out, int v) {
  unsigned u = static_cast<unsigned>(v + 1);
  out.push_back(static_cast<char>((u >> 8) & 0xff));
  out.push_back(static_cast<char>(u & 0xff));
}

void put_str(std::string& out, const std::string& s) {
  out.push_back(static_cast<char>(s.size()));
  out += s;
}

std::string encode_from(const Surface& s, int root, std::vector<int>& num) {
  const int n = s.darts();
  num.assign(n, -1);
  std::vector<int> order;
  order.reserve(n);
  num[root] = 0;
  order.push_back(root);
  for (std::size_t h = 0; h < order.size(); ++h) {
    int d = order[h];
    for (int x : {s.next[d], s.inv[d]}) {
      if (num[x] < 0) {
        num[x] = static_cast<int>(order.size());
        order.push_back(x);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) throw Error("surface is not connected");
  std::vector<char> is_base(n, 0);
  for (const auto& c : s.circles) is_base[c.base] = 1;
  // Interior vertices may be permuted by homeomorphisms fixing the boundary,
  // so only boundary labels enter the code.
  std::set<std::string> boundary;
  for (int d = 0; d < n; ++d)
    if (s.is_hole(d)) boundary.insert(s.label[d]);
  std::string code;
  code.reserve(static_cast<std::size_t>(n) * 10 + 8);
  put_int(code, n);
  code.push_back(static_cast<char>(s.circles.size()));
  for (const auto& c : s.circles) code.push_back(c.out ? 'o' : 'i');
  for (int d : order) {
    put_int(code, num[s.next[d]]);
    put_int(code, num[s.inv[d]]);
    put_int(code, s.hole[d]);
    code.push_back(is_base[d] ? 'b' : '.');
    put_str(code, boundary.count(s.label[d]) ? s.label[d] : std::string("*"));
  }
  return code;
}

}  // namespace

CanonicalForm canonical_form(const Surface& s) {
  if (s.darts() >= 65000) throw Error("surface too large for canonical code");
  CanonicalForm best;
  std::vector<int> num;
  if (!s.circles.empty()) {
    best.code = encode_from(s, s.circles[0].base, num);
    best.old_to_new = num;
    return best;
  }
  bool first = true;
  for (int r = 0; r < s.darts(); ++r) {
    std::string c = encode_from(s, r, num);
    if (first || c < best.code) {
      best.code = std::move(c);
      best.old_to_new = num;
      first = false;
    }
  }
  return best;
}

CanonicalCode canonical_code(const Surface& s) { return canonical_form(s).code; }

namespace {

}  // namespace

Surface renumbered(const Surface& s, const std::vector<int>& old_to_new) {
  const int n = s.darts();
  Surface t;
  t.next.assign(n, 0);
  t.inv.assign(n, 0);
  t.hole.assign(n, -1);
  t.label.assign(n, {});
  for (int d = 0; d < n; ++d) {
    int m = old_to_new[d];
    t.next[m] = old_to_new[s.next[d]];
    t.inv[m] = old_to_new[s.inv[d]];
    t.hole[m] = s.hole[d];
    t.label[m] = s.label[d];
  }
  t.circles = s.circles;
  for (auto& c : t.circles) c.base = old_to_new[c.base];
  return t;
}

namespace {

// Drops the marked darts and compacts ids.
Surface compact(const Surface& s, const std::vector<char>& drop) {
  const int n = s.darts();
  std::vector<int> map(n, -1);
  int k = 0;
  for (int d = 0; d < n; ++d)
    if (!drop[d]) map[d] = k++;
  Surface t;
  t.next.resize(k);
  t.inv.resize(k);
  t.hole.resize(k);
  t.label.resize(k);
  for (int d = 0; d < n; ++d) {
    if (drop[d]) continue;
    int m = map[d];
    if (map[s.next[d]] < 0 || map[s.inv[d]] < 0) throw Error("compaction left a dangling dart");
    t.next[m] = map[s.next[d]];
    t.inv[m] = map[s.inv[d]];
    t.hole[m] = s.hole[d];
    t.label[m] = s.label[d];
  }
  t.circles = s.circles;
  for (auto& c : t.circles) c.base = map[c.base];
  return t;
}

}  // namespace

Surface canonicalize(const Surface& s) { return renumbered(s, canonical_form(s).old_to_new); }

Surface split_face(const Surface& s, int face_start, int i, int j) {
  if (face_start < 0 || face_start >= s.darts() || s.is_hole(face_start)) throw Error("split_face: not a face dart");
  std::vector<int> f;
  int x = face_start;
  do {
    f.push_back(x);
    x = s.next[x];
  } while (x != face_start);
  const int n = static_cast<int>(f.size());
  if (n < 4) throw Error("split_face: face has fewer than 4 sides");
  if (i < 0 || j < 0 || i >= n || j >= n || i == j) throw Error("split_face: corners must be distinct");
  int gap = ((j - i) % n + n) % n;
  if (gap == 1 || gap == n - 1) throw Error("split_face: adjacent corners would create a 2-gon");
  Surface t = s;
  const int p = s.darts();
  const int q = p + 1;
  const int fi = f[i], fj = f[j];
  const int before_i = f[(i + n - 1) % n], before_j = f[(j + n - 1) % n];
  t.next.push_back(fi);  // p closes f_i .. f_{j-1}
  t.next.push_back(fj);  // q closes f_j .. f_{i-1}
  t.next[before_j] = p;
  t.next[before_i] = q;
  t.inv.push_back(q);
  t.inv.push_back(p);
  t.hole.push_back(-1);
  t.hole.push_back(-1);
  t.label.push_back(s.label[fj]);
  t.label.push_back(s.label[fi]);
  return t;
}

bool erasable(const Surface& s, int d) {
  if (d < 0 || d >= s.darts() || !s.is_interior(d)) return false;
  const int e = s.inv[d];
  int x = d;
  do {
    if (x == e) return false;
    x = s.next[x];
  } while (x != d);
  return true;
}

Surface erase_edge(const Surface& s, int d) {
  if (d < 0 || d >= s.darts()) throw Error("erase_edge: dart out of range");
  if (!s.is_interior(d)) throw Error("erase_edge: boundary edge");
  if (!erasable(s, d)) throw Error("erase_edge: same face on both sides");
  const int e = s.inv[d];
  Surface t = s;
  t.next[s.prev(d)] = s.next[e];
  t.next[s.prev(e)] = s.next[d];
  std::vector<char> drop(s.darts(), 0);
  drop[d] = drop[e] = 1;
  return compact(t, drop);
}

Surface flip(const Surface& s, int d) {
  if (!erasable(s, d)) throw Error("flip: edge is not flippable");
  const int e = s.inv[d];
  int a = d;
  int size_d = 0, size_e = 0;
  do {
    ++size_d;
    a = s.next[a];
  } while (a != d);
  a = e;
  do {
    ++size_e;
    a = s.next[a];
  } while (a != e);
  if (size_d != 3 || size_e != 3) throw Error("flip: edge does not lie between two triangles");
  const int nd = s.next[d];
  Surface t = erase_edge(s, d);
  // Surviving ids shift down past the two erased darts.
  auto shift = [&](int x) { return x - (x > d) - (x > e); };
  // merged square: next(d), prev(d), next(e), prev(e); old diagonal joined corners 0 and 2
  return split_face(t, shift(nd), 1, 3);
}

Surface rename_labels(const Surface& s, const std::map<std::string, std::string>& rename) {
  if (rename.empty()) return s;
  Surface t = s;
  for (auto& l : t.label) {
    auto it = rename.find(l);
    if (it != rename.end()) l = it->second;
  }
  return t;
}

Surface glue(const Surface& second, const Surface& first, const GlueSpec& spec) {
  Surface a = rename_labels(first, spec.rename_first);
  Surface b = rename_labels(second, spec.rename_second);
  const int na = a.darts();
  const int ca = static_cast<int>(a.circles.size());
  Surface t = a;
  for (int d = 0; d < b.darts(); ++d) {
    t.next.push_back(b.next[d] + na);
    t.inv.push_back(b.inv[d] + na);
    t.hole.push_back(b.hole[d] < 0 ? -1 : b.hole[d] + ca);
    t.label.push_back(b.label[d]);
  }
  for (auto c : b.circles) {
    c.base += na;
    t.circles.push_back(c);
  }
  std::vector<char> drop(t.darts(), 0);
  std::vector<char> matched_circle(t.circles.size(), 0);
  for (const auto& [c1, c2] : spec.circles) {
    if (c1 < 0 || c1 >= ca || c2 < 0 || c2 >= static_cast<int>(b.circles.size()))
      throw Error("glue: circle index out of range");
    auto legs1 = a.circle_legs(c1);
    auto legs2 = b.circle_legs(c2);
    if (legs1.size() != legs2.size())
      throw Error("glue: boundary mismatch (" + std::to_string(legs1.size()) + " vs " +
                  std::to_string(legs2.size()) + " edges)");
    std::vector<char> used(legs2.size(), 0);
    for (const auto& l1 : legs1) {
      int found = -1;
      for (std::size_t m = 0; m < legs2.size(); ++m) {
        if (!used[m] && legs2[m].from == l1.to && legs2[m].to == l1.from) {
          found = static_cast<int>(m);
          break;
        }
      }
      if (found < 0) throw Error("glue: boundary mismatch at edge " + l1.from + "->" + l1.to);
      used[found] = 1;
      int r1 = l1.dart;
      int r2 = legs2[found].dart + na;
      drop[t.inv[r1]] = 1;
      drop[t.inv[r2]] = 1;
      t.inv[r1] = r2;
      t.inv[r2] = r1;
    }
    matched_circle[c1] = 1;
    matched_circle[ca + c2] = 1;
  }
  std::vector<int> new_index(t.circles.size(), -1);
  std::vector<Circle> kept;
  for (std::size_t c = 0; c < t.circles.size(); ++c) {
    if (matched_circle[c]) continue;
    new_index[c] = static_cast<int>(kept.size());
    kept.push_back(t.circles[c]);
  }
  for (int d = 0; d < t.darts(); ++d) {
    if (t.hole[d] >= 0 && !drop[d]) t.hole[d] = new_index[t.hole[d]];
  }
  t.circles = kept;
  Surface out = compact(t, drop);
  auto rep = out.validate();
  if (!rep.ok) throw Error("glue: result invalid: " + rep.errors.front());
  return out;
}

Surface relabel_T(const Surface& s, int circle, int shift) {
  auto legs = s.circle_legs(circle);
  const int k = static_cast<int>(legs.size());
  std::map<std::string, std::string> rename;
  for (int p = 0; p < k; ++p) rename[legs[p].from] = legs[(((p - shift) % k) + k) % k].from;
  Surface t = rename_labels(s, rename);
  t.circles[circle].base = legs[((shift % k) + k) % k].dart;
  return t;
}

Surface build_surface(const std::vector<std::vector<Side>>& faces, const std::vector<CircleSpec>& circles) {
  Surface s;
  std::map<std::string, std::vector<int>> uses;
  for (const auto& f : faces) {
    if (f.empty()) throw Error("build_surface: empty face");
    const int start = s.darts();
    const int n = static_cast<int>(f.size());
    for (int i = 0; i < n; ++i) {
      s.next.push_back(start + (i + 1) % n);
      s.inv.push_back(-1);
      s.hole.push_back(-1);
      s.label.push_back(f[i].from);
      uses[f[i].edge].push_back(start + i);
    }
  }
  const int real = s.darts();
  for (const auto& [name, ds] : uses) {
    if (ds.size() > 2) throw Error("build_surface: edge " + name + " used more than twice");
    if (ds.size() == 2) {
      int a = ds[0], b = ds[1];
      if (s.label[a] != s.label[s.next[b]] || s.label[b] != s.label[s.next[a]])
        throw Error("build_surface: edge " + name + " sides do not run opposite");
      s.inv[a] = b;
      s.inv[b] = a;
    } else {
      int d = ds[0];
      int h = s.darts();
      s.next.push_back(-1);
      s.inv.push_back(d);
      s.hole.push_back(0);
      s.label.push_back(s.label[s.next[d]]);
      s.inv[d] = h;
    }
  }
  std::vector<int> pv(real);
  for (int d = 0; d < real; ++d) pv[s.next[d]] = d;
  for (int h = real; h < s.darts(); ++h) {
    int y = s.inv[h];
    int guard = 0;
    while (true) {
      int z = s.inv[pv[y]];
      if (z >= real) {
        s.next[h] = z;
        break;
      }
      y = z;
      if (++guard > real) throw Error("build_surface: cannot close boundary");
    }
  }
  std::vector<int> cyc(s.darts(), -1);
  for (std::size_t c = 0; c < circles.size(); ++c) {
    int base = -1;
    for (int d = 0; d < real; ++d) {
      if (s.inv[d] >= real && s.label[d] == circles[c].base_label) {
        base = d;
        break;
      }
    }
    if (base < 0) throw Error("build_surface: no boundary vertex " + circles[c].base_label);
    int h = s.inv[base];
    if (cyc[h] >= 0) throw Error("build_surface: circle named twice");
    int x = h;
    do {
      cyc[x] = static_cast<int>(c);
      x = s.next[x];
    } while (x != h);
    s.circles.push_back({circles[c].out, base});
  }
  for (int h = real; h < s.darts(); ++h) {
    if (cyc[h] < 0) throw Error("build_surface: boundary circle through " + s.label[h] + " not declared");
    s.hole[h] = cyc[h];
  }
  return s;
}

}  // namespace pachner
