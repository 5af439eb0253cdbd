#include "pachner/flip_complex.hpp"

#include <algorithm>
#include <deque>

namespace pachner {

int orientation_sign(const Surface& s, const CanonicalForm& cf, const std::vector<int>& starts) {
  const auto& num = cf.old_to_new;
  int big = 0;
  int dim = 0;
  for (const auto& f : s.faces()) {
    if (f.size() >= 4) ++big;
    dim += static_cast<int>(f.size()) - 3;
  }
  if (dim > 2) throw Error("orientations are defined only for cells of dimension <= 2");
  if (static_cast<int>(starts.size()) != big) throw Error("orientation needs one start per polygon of size >= 4");
  int sign = 1;
  std::vector<int> keys;
  for (int d : starts) {
    if (s.is_hole(d)) throw Error("orientation start is a hole dart");
    int best = -1, best_pos = 0, pos = 0, x = d;
    do {
      if (best < 0 || num[x] < best) {
        best = num[x];
        best_pos = pos;
      }
      ++pos;
      x = s.next[x];
    } while (x != d);
    if (pos == 4 && (best_pos & 1)) sign = -sign;
    keys.push_back(best);
  }
  if (keys.size() == 2 && keys[0] > keys[1]) sign = -sign;
  return sign;
}

std::vector<CellFace> cell_boundary(const Surface& rep, bool oriented) {
  std::vector<CellFace> out;
  const auto faces = rep.faces();
  std::vector<int> big;
  int dim = 0;
  for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
    if (faces[i].size() >= 4) big.push_back(i);
    dim += static_cast<int>(faces[i].size()) - 3;
  }
  if (oriented && dim > 2) throw Error("signed boundary requested above dimension 2");
  for (std::size_t b = 0; b < big.size(); ++b) {
    const auto& f = faces[big[b]];
    const int n = static_cast<int>(f.size());
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        if (i == 0 && j == n - 1) continue;
        Surface split = split_face(rep, f[0], i, j);
        CanonicalForm cf = canonical_form(split);
        int sign = 1;
        if (oriented) {
          if (n == 4) {
            int base = (i == 0) ? 1 : -1;
            if (dim == 1) {
              sign = base;
            } else {
              int other = faces[big[1 - b]][0];
              sign = (b == 0 ? base : -base) * orientation_sign(split, cf, {other});
            }
          } else {
            int a = (j - i == 2) ? i : j;
            sign = orientation_sign(split, cf, {f[(a + 2) % 5]});
          }
        }
        out.push_back({cf.code, renumbered(split, cf.old_to_new), sign});
      }
    }
  }
  return out;
}

void Chain::add_canonical(const CanonicalCode& code, const Surface& canonical_rep, const Rational& c) {
  Rational v = reduce(ring, c);
  if (pachner::is_zero(v)) return;
  auto it = coef.find(code);
  if (it == coef.end()) {
    coef.emplace(code, v);
    rep.emplace(code, canonical_rep);
    return;
  }
  it->second = pachner::add(ring, it->second, v);
  if (pachner::is_zero(it->second)) {
    coef.erase(it);
    rep.erase(code);
  }
}

void Chain::add(const Surface& s, const Rational& c, const std::vector<int>& starts) {
  CanonicalForm cf = canonical_form(s);
  Rational v = c;
  if (ring == Ring::Q && !starts.empty()) v *= orientation_sign(s, cf, starts);
  add_canonical(cf.code, renumbered(s, cf.old_to_new), v);
}

int Chain::dimension() const {
  if (rep.empty()) return -1;
  return rep.begin()->second.cell_dimension();
}

Chain Chain::operator+(const Chain& o) const {
  Chain r = *this;
  for (const auto& [code, v] : o.coef) r.add_canonical(code, o.rep.at(code), v);
  return r;
}

Chain chain_boundary(const Chain& c) {
  Chain out(c.ring);
  for (const auto& [code, v] : c.coef) {
    for (const auto& f : cell_boundary(c.rep.at(code), c.ring == Ring::Q)) {
      out.add_canonical(f.code, f.rep, v * f.sign);
    }
  }
  return out;
}

std::vector<long> FlipComplex::fvector() const {
  std::vector<long> f;
  for (const auto& c : codes) f.push_back(static_cast<long>(c.size()));
  return f;
}

std::size_t FlipComplex::cell_count() const {
  std::size_t n = 0;
  for (const auto& c : codes) n += c.size();
  return n;
}

int FlipComplex::find(const CanonicalCode& code) const {
  for (const auto& m : index) {
    auto it = m.find(code);
    if (it != m.end()) return it->second;
  }
  return -1;
}

SparseGf2 FlipComplex::boundary_gf2(int d) const {
  if (d < 1 || d >= static_cast<int>(bd.size())) throw Error("boundary dimension out of range");
  SparseGf2 m(static_cast<int>(codes[d - 1].size()), static_cast<int>(codes[d].size()));
  for (int c = 0; c < static_cast<int>(bd[d].size()); ++c)
    for (const auto& [r, v] : bd[d][c])
      if (is_zero(reduce(Ring::GF2, v)) == false) m.toggle(r, c);
  m.finalize();
  return m;
}

Matrix FlipComplex::boundary_q(int d) const {
  if (d < 1 || d > signed_upto) throw Error("signed boundary not available in dimension " + std::to_string(d));
  Matrix m(Ring::Q, static_cast<int>(codes[d - 1].size()), static_cast<int>(codes[d].size()));
  for (int c = 0; c < static_cast<int>(bd[d].size()); ++c)
    for (const auto& [r, v] : bd[d][c]) m.set(r, c, m(r, c) + v);
  return m;
}

namespace {

struct Builder {
  FlipComplex& fc;
  const BuildOptions& opt;
  std::size_t total = 0;

  bool insert(int d, const CanonicalForm& cf, const Surface& s) {
    auto [it, inserted] = fc.index[d].try_emplace(cf.code, static_cast<int>(fc.codes[d].size()));
    if (!inserted) return false;
    fc.codes[d].push_back(cf.code);
    fc.reps[d].push_back(renumbered(s, cf.old_to_new));
    if (++total > opt.max_cells)
      throw CapExceeded("flip complex exceeds the cell cap of " + std::to_string(opt.max_cells));
    return true;
  }

  void grow(int d) {
    fc.codes.emplace_back();
    fc.reps.emplace_back();
    fc.index.emplace_back();
    if (d == 0) return;
    for (std::size_t i = 0; i < fc.reps[d - 1].size(); ++i) {
      const Surface rep = fc.reps[d - 1][i];
      for (int x = 0; x < rep.darts(); ++x) {
        if (x > rep.inv[x] || !erasable(rep, x)) continue;
        Surface e = erase_edge(rep, x);
        insert(d, canonical_form(e), e);
      }
    }
  }
};

bool has_erasable_edge(const Surface& s) {
  for (int x = 0; x < s.darts(); ++x)
    if (erasable(s, x)) return true;
  return false;
}

}  // namespace

FlipComplex build_flip_complex(const Surface& seed, const BuildOptions& opt) {
  auto rep = seed.validate();
  if (!rep.ok) throw Error("seed surface invalid: " + rep.errors.front());
  if (!seed.is_triangulation()) throw Error("seed surface is not a triangulation");
  FlipComplex fc;
  fc.ring = opt.ring;
  Builder b{fc, opt};
  b.grow(0);
  b.insert(0, canonical_form(seed), seed);
  for (std::size_t h = 0; h < fc.reps[0].size(); ++h) {
    const Surface t = fc.reps[0][h];
    for (int x = 0; x < t.darts(); ++x) {
      if (x > t.inv[x] || !erasable(t, x)) continue;
      Surface f = flip(t, x);
      b.insert(0, canonical_form(f), f);
    }
  }
  fc.built_dim = 0;
  for (int d = 1; d <= opt.max_dim; ++d) {
    b.grow(d);
    if (fc.codes[d].empty()) {
      fc.codes.pop_back();
      fc.reps.pop_back();
      fc.index.pop_back();
      fc.complete = true;
      break;
    }
    fc.built_dim = d;
  }
  if (!fc.complete) {
    fc.complete = true;
    for (const auto& r : fc.reps[fc.built_dim])
      if (has_erasable_edge(r)) fc.complete = false;
  }
  fc.signed_upto = opt.ring == Ring::Q ? std::min(2, fc.built_dim) : -1;
  fc.bd.assign(fc.built_dim + 1, {});
  for (int d = 1; d <= fc.built_dim; ++d) {
    const bool oriented = d <= fc.signed_upto;
    fc.bd[d].resize(fc.codes[d].size());
    for (std::size_t i = 0; i < fc.codes[d].size(); ++i) {
      std::map<int, Rational> acc;
      for (const auto& f : cell_boundary(fc.reps[d][i], oriented)) {
        auto it = fc.index[d - 1].find(f.code);
        if (it == fc.index[d - 1].end()) throw Error("face of a cell lies outside the complex");
        acc[it->second] += f.sign;
      }
      for (const auto& [r, v] : acc) {
        Rational x = reduce(fc.ring, v);
        if (!is_zero(x)) fc.bd[d][i].emplace_back(r, x);
      }
    }
  }
  return fc;
}

bool boundary_squares_to_zero(const FlipComplex& fc, Ring ring) {
  for (int d = 2; d <= fc.built_dim; ++d) {
    if (ring == Ring::Q) {
      if (d > fc.signed_upto) break;
      if (!(fc.boundary_q(d - 1) * fc.boundary_q(d)).is_zero()) return false;
      continue;
    }
    for (std::size_t c = 0; c < fc.bd[d].size(); ++c) {
      std::vector<int> acc;
      for (const auto& [r, v] : fc.bd[d][c]) {
        if (is_zero(reduce(Ring::GF2, v))) continue;
        for (const auto& [r2, v2] : fc.bd[d - 1][r])
          if (!is_zero(reduce(Ring::GF2, v2))) acc.push_back(r2);
      }
      std::sort(acc.begin(), acc.end());
      for (std::size_t i = 0; i < acc.size();) {
        std::size_t j = i;
        while (j < acc.size() && acc[j] == acc[i]) ++j;
        if ((j - i) % 2) return false;
        i = j;
      }
    }
  }
  return true;
}

namespace {

int rank_of(const SparseGf2& m) {
  // Dense bit rows for moderate sizes, sparse column reduction otherwise.
  if (static_cast<long long>(m.rows()) * m.cols() <= 64LL * 1024 * 1024) return gf2_rank(m.to_dense());
  return Gf2ColumnReducer(m).rank();
}

}  // namespace

Homology homology_gf2(const FlipComplex& fc, bool with_representatives) {
  Homology h;
  const int top = fc.built_dim;
  std::vector<int> rank(top + 2, 0);
  for (int d = 1; d <= top; ++d) rank[d] = rank_of(fc.boundary_gf2(d));
  const int last = fc.complete ? top : top - 1;
  for (int d = 0; d <= last; ++d) {
    int n = static_cast<int>(fc.codes[d].size());
    h.betti.push_back(n - rank[d] - (d + 1 <= top ? rank[d + 1] : 0));
    std::vector<std::vector<int>> reps;
    if (with_representatives && h.betti.back() > 0) {
      std::vector<std::vector<int>> cycles;
      if (d == 0) {
        for (int i = 0; i < n; ++i) cycles.push_back({i});
      } else {
        cycles = Gf2ColumnReducer(fc.boundary_gf2(d)).kernel();
      }
      std::vector<std::vector<int>> cols;
      if (d + 1 <= top) {
        SparseGf2 up = fc.boundary_gf2(d + 1);
        for (int c = 0; c < up.cols(); ++c) cols.push_back(up.column(c));
      }
      const int images = static_cast<int>(cols.size());
      for (auto& z : cycles) cols.push_back(z);
      SparseGf2 all(n, static_cast<int>(cols.size()));
      for (int c = 0; c < all.cols(); ++c)
        for (int r : cols[c]) all.toggle(r, c);
      all.finalize();
      Gf2ColumnReducer red(all);
      for (int c = images; c < all.cols(); ++c)
        if (red.is_pivot(c)) reps.push_back(all.column(c));
    }
    h.representatives.push_back(std::move(reps));
  }
  return h;
}

std::optional<std::vector<int>> solve_boundary_gf2(const FlipComplex& fc, int d, const std::vector<int>& z) {
  if (d < 0 || d > fc.built_dim) throw Error("degree out of built range");
  if (d + 1 > fc.built_dim) {
    if (!fc.complete) throw Error("degree out of built range");
    return z.empty() ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
  }
  Gf2ColumnReducer red(fc.boundary_gf2(d + 1));
  std::vector<int> t = z;
  std::sort(t.begin(), t.end());
  return red.express(t);
}

std::vector<Rational> coboundary(const FlipComplex& fc, int d, const std::vector<Rational>& f) {
  if (d < 0 || d + 1 > fc.built_dim) throw Error("coboundary out of built range");
  if (f.size() != fc.codes[d].size()) throw Error("cochain has the wrong length");
  std::vector<Rational> out(fc.codes[d + 1].size());
  for (std::size_t c = 0; c < out.size(); ++c) {
    Rational s = 0;
    for (const auto& [r, v] : fc.bd[d + 1][c]) s += v * f[r];
    out[c] = reduce(fc.ring, s);
  }
  return out;
}

}  // namespace pachner
