#include "pachner/state_sum.hpp"

#include <algorithm>

#include "pachner/contraction.hpp"
#include "pachner/surface_builders.hpp"
#include "pachner/tensor_ops.hpp"

namespace pachner {

StateValue evaluate_Z(const Surface& s, const CyclicAInfty& v) {
  SurfaceReport r = s.validate();
  if (!r.ok) throw Error("invalid surface: " + r.errors.front());
  const auto faces = s.faces();
  std::vector<GradedTensor> nodes;
  nodes.reserve(faces.size());
  std::vector<Leg> leg_of(s.darts(), Leg{-1, -1});
  for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
    const int n = static_cast<int>(faces[f].size());
    if (n > v.n_max)
      throw Error("face of size " + std::to_string(n) + " exceeds n_max = " + std::to_string(v.n_max));
    nodes.push_back(v.c_or_zero(n));
    for (int p = 0; p < n; ++p) leg_of[faces[f][p]] = Leg{f, p};
  }
  ContractionNetwork net;
  for (const auto& t : nodes) net.nodes.push_back(&t);
  for (int d = 0; d < s.darts(); ++d)
    if (s.is_interior(d) && d < s.inv[d]) net.edges.emplace_back(leg_of[d], leg_of[s.inv[d]]);
  StateValue out;
  out.legs = s.boundary_legs();
  for (const auto& l : out.legs) net.open.push_back(leg_of[l.dart]);
  if (nodes.empty()) throw Error("surface has no faces");
  out.tensor = contract(net, v.ginv);
  return out;
}

const GradedTensor& ZCache::get(const CanonicalCode& code, const Surface& canonical_rep) {
  auto it = map_.find(code);
  if (it != map_.end()) return it->second;
  return map_.emplace(code, evaluate_Z(canonical_rep, v_).tensor).first->second;
}

GradedTensor zero_value(const Surface& s, const CyclicAInfty& v, int degree) {
  return GradedTensor(v.basis, v.ring, static_cast<int>(s.boundary_legs().size()), degree);
}

GradedTensor evaluate_on_chain(const Chain& chain, const CyclicAInfty& v, ZCache* cache) {
  if (chain.is_zero()) return GradedTensor();
  ZCache local(v);
  ZCache& zc = cache ? *cache : local;
  std::optional<GradedTensor> sum;
  for (const auto& [code, c] : chain.coef) {
    GradedTensor t = zc.get(code, chain.rep.at(code)).scaled(c);
    if (!sum) {
      sum = t;
    } else {
      if (!sum->same_shape(t)) throw Error("chain mixes boundary profiles");
      sum = *sum + t;
    }
  }
  return *sum;
}

GradedTensor closedness_defect(const Surface& canonical_rep, const CyclicAInfty& v, ZCache& cache) {
  const bool oriented = v.ring == Ring::Q;
  GradedTensor out = apply_Q(cache.get(canonical_code(canonical_rep), canonical_rep), v.Q);
  for (const auto& f : cell_boundary(canonical_rep, oriented)) {
    const GradedTensor& z = cache.get(f.code, f.rep);
    out = out + (f.sign == 1 ? z : z.scaled(f.sign));
  }
  return out;
}

ClosednessReport check_closedness(const FlipComplex& fc, const CyclicAInfty& v, int through_dim) {
  ClosednessReport rep;
  rep.through_dim = std::min(through_dim, fc.built_dim);
  ZCache cache(v);
  // Z per cell index; the complex already stores every boundary.
  std::vector<std::vector<std::optional<GradedTensor>>> z(rep.through_dim + 1);
  auto Z = [&](int d, long i) -> const GradedTensor& {
    auto& slot = z[d][i];
    if (!slot) slot = evaluate_Z(fc.reps[d][i], v).tensor;
    return *slot;
  };
  for (int d = 0; d <= rep.through_dim; ++d) {
    const long n = static_cast<long>(fc.reps[d].size());
    z[d].resize(n);
    if (v.ring == Ring::Q && d > 2) {
      rep.checked.push_back(0);
      rep.skipped += n;
      continue;
    }
    const bool stored = v.ring == Ring::GF2 || (fc.ring == Ring::Q && d <= fc.signed_upto);
    long checked = 0;
    for (long i = 0; i < n; ++i) {
      GradedTensor defect;
      if (stored) {
        defect = apply_Q(Z(d, i), v.Q);
        if (d > 0)
          for (const auto& [r, c] : fc.bd[d][i]) defect = defect + Z(d - 1, r).scaled(c);
      } else {
        defect = closedness_defect(fc.reps[d][i], v, cache);
      }
      ++checked;
      if (defect.is_zero()) continue;
      ++rep.failure_count;
      if (rep.failures.size() < 5) {
        const auto& [idx, val] = *defect.entries().begin();
        std::string w = "dim " + std::to_string(d) + " cell " + std::to_string(i) + ": defect at (";
        for (std::size_t j = 0; j < idx.size(); ++j) w += (j ? "," : "") + defect.basis().label(idx[j]);
        rep.failures.push_back(w + ") = " + to_string(val));
      }
    }
    if (d > 0) z[d - 1].clear();
    rep.checked.push_back(checked);
  }
  if (rep.failure_count > 0)
    rep.status = "fail";
  else if (rep.skipped > 0 || through_dim > fc.built_dim)
    rep.status = "skipped";
  return rep;
}

namespace {

std::string suffix(const std::string& l) { return l.substr(1); }

// pairs[p] = in-leg index of `second` meeting out-leg p of `first`.
GradedTensor compose_core(const GradedTensor& first, int first_in, const GradedTensor& second, int second_in,
                          const std::vector<int>& pairs, const CyclicAInfty& v) {
  ContractionNetwork net;
  net.nodes = {&first, &second};
  for (int p = 0; p < static_cast<int>(pairs.size()); ++p)
    net.edges.emplace_back(Leg{0, first_in + p}, Leg{1, pairs[p]});
  for (int i = 0; i < first_in; ++i) net.open.push_back(Leg{0, i});
  for (int i = second_in; i < second.arity(); ++i) net.open.push_back(Leg{1, i});
  return contract(net, v.ginv);
}

}  // namespace

StateValue compose_cylinders(const StateValue& first, const StateValue& second, const CyclicAInfty& v) {
  auto in_count = [](const StateValue& s) {
    if (s.legs.empty()) return 0;
    int c0 = s.legs.front().circle;
    int n = 0;
    while (n < static_cast<int>(s.legs.size()) && s.legs[n].circle == c0) ++n;
    return n;
  };
  const int fi = in_count(first), si = in_count(second);
  const int fo = static_cast<int>(first.legs.size()) - fi;
  if (fo != si) throw Error("boundary mismatch: " + std::to_string(fo) + " out-legs against " + std::to_string(si) + " in-legs");
  std::vector<int> pairs(fo, -1);
  for (int p = 0; p < fo; ++p) {
    const auto& o = first.legs[fi + p];
    for (int q = 0; q < si; ++q) {
      const auto& in = second.legs[q];
      if (suffix(in.from) == suffix(o.to) && suffix(in.to) == suffix(o.from)) pairs[p] = q;
    }
    if (pairs[p] < 0) throw Error("boundary mismatch: no in-leg meets out-leg " + o.from + "->" + o.to);
  }
  StateValue out;
  out.tensor = compose_core(first.tensor, fi, second.tensor, si, pairs, v);
  out.legs.assign(first.legs.begin(), first.legs.begin() + fi);
  out.legs.insert(out.legs.end(), second.legs.begin() + si, second.legs.end());
  return out;
}

GradedTensor compose_cylinder_tensors(const GradedTensor& first, const GradedTensor& second, int k,
                                      const CyclicAInfty& v) {
  if (first.arity() != 2 * k || second.arity() != 2 * k) throw Error("cylinder tensors need 2k legs");
  std::vector<int> pairs(k);
  for (int p = 0; p < k; ++p) pairs[p] = ((k - 1 - p) % k + k) % k;
  return compose_core(first, k, second, k, pairs, v);
}

FunctorialityReport check_functoriality(const Surface& first, const Surface& second, const CyclicAInfty& v) {
  FunctorialityReport r;
  StateValue glued = evaluate_Z(stack(first, second), v);
  StateValue composed = compose_cylinders(evaluate_Z(first, v), evaluate_Z(second, v), v);
  if (!glued.tensor.same_shape(composed.tensor)) {
    r.detail = "shape mismatch";
    return r;
  }
  GradedTensor diff = glued.tensor - composed.tensor;
  r.ok = diff.is_zero();
  if (r.ok) {
    r.detail = "equal (" + std::to_string(glued.tensor.entries().size()) + " nonzero entries)";
  } else {
    const auto& [idx, val] = *diff.entries().begin();
    r.detail = "differ at an entry by " + to_string(val);
  }
  return r;
}

Rational dw_brute(const GroupTable& g, int genus) {
  check_group(g);
  if (genus < 0) throw Error("genus must be >= 0");
  const int n = g.order();
  const int e = g.identity();
  // hits[x] = #{(a,b) : aba^-1b^-1 = x}; then convolve genus times.
  std::vector<mpz_class> hits(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) hits[g.mul[g.mul[g.mul[a][b]][g.inverse(a)]][g.inverse(b)]] += 1;
  std::vector<mpz_class> acc(n, 0);
  acc[e] = 1;
  for (int h = 0; h < genus; ++h) {
    std::vector<mpz_class> nxt(n, 0);
    for (int x = 0; x < n; ++x)
      if (acc[x] != 0)
        for (int y = 0; y < n; ++y) nxt[g.mul[x][y]] += acc[x] * hits[y];
    acc = std::move(nxt);
  }
  Rational r(acc[e], n);
  r.canonicalize();
  return r;
}

Rational dw_from_irreps(int order, const std::vector<int>& dims, int genus) {
  Rational s = 0;
  for (int d : dims) {
    Rational q = Rational(order, d);
    q.canonicalize();
    Rational p = 1;
    const int ex = 2 * genus - 2;
    for (int i = 0; i < std::abs(ex); ++i) p *= q;
    s += ex >= 0 ? p : 1 / p;
  }
  return s;
}

Rational dw_normalized(const Rational& state_sum, int group_order, int chi) {
  Rational f = 1;
  for (int i = 0; i < std::abs(chi); ++i) f *= group_order;
  return chi >= 0 ? Rational(state_sum / f) : Rational(state_sum * f);
}

CenterReduction center_reduction(const CyclicAInfty& v) {
  if (!v.strict()) throw Error("center reduction needs a strict algebra");
  const Ring ring = v.ring;
  const int d = v.basis->size();
  const auto m = v.m2();
  // Commutator span as columns.
  Matrix comm(ring, d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int x = 0; x < d; ++x) comm.set(x, a * d + b, m[a][b][x] - m[b][a][x]);
  Elimination ce = row_reduce(comm.transposed());
  CenterReduction r;
  r.dim_commutator = ce.rank;
  std::vector<std::vector<Rational>> cbasis;
  for (int i = 0; i < ce.rank; ++i) {
    std::vector<Rational> row(d);
    for (int x = 0; x < d; ++x) row[x] = ce.reduced(i, x);
    cbasis.push_back(row);
  }
  // Center: z with z a = a z for every basis a.
  Matrix cen(ring, d * d, d);
  for (int a = 0; a < d; ++a)
    for (int x = 0; x < d; ++x)
      for (int z = 0; z < d; ++z) cen.set(a * d + x, z, m[z][a][x] - m[a][z][x]);
  r.center_basis = kernel_basis(cen);
  r.dim_center = static_cast<int>(r.center_basis.size());
  // g-orthogonal complement of [V,V].
  Matrix gm = tensor_to_matrix(v.g);
  Matrix orth(ring, std::max(1, r.dim_commutator), d);
  for (int i = 0; i < r.dim_commutator; ++i)
    for (int y = 0; y < d; ++y) {
      Rational s = 0;
      for (int x = 0; x < d; ++x) s += cbasis[i][x] * gm(x, y);
      orth.set(i, y, s);
    }
  auto zbasis = r.dim_commutator == 0 ? kernel_basis(Matrix(ring, 1, d)) : kernel_basis(orth);
  // Direct sum check and projector P = [0 on [V,V], 1 on complement].
  Matrix basis_m(ring, d, d);
  int col = 0;
  for (const auto& b : cbasis) {
    for (int x = 0; x < d; ++x) basis_m.set(x, col, b[x]);
    ++col;
  }
  for (const auto& b : zbasis) {
    if (col >= d) break;
    for (int x = 0; x < d; ++x) basis_m.set(x, col, b[x]);
    ++col;
  }
  auto binv = (col == d && r.dim_commutator + static_cast<int>(zbasis.size()) == d) ? inverse(basis_m) : std::nullopt;
  r.direct = binv.has_value();
  if (!r.direct) return r;
  Matrix diag(ring, d, d);
  for (int i = r.dim_commutator; i < d; ++i) diag.set(i, i, 1);
  r.projector = basis_m * diag * *binv;
  // Cylinder pairing gamma(x,y) = tr(a -> x (a y)).
  Matrix gamma(ring, d, d);
  for (int x = 0; x < d; ++x)
    for (int y = 0; y < d; ++y) {
      Rational s = 0;
      for (int a = 0; a < d; ++a)
        for (int w = 0; w < d; ++w) s += m[a][y][w] * m[x][w][a];
      gamma.set(x, y, s);
    }
  auto kern = kernel_basis(gamma.transposed());
  bool kc = static_cast<int>(kern.size()) == r.dim_commutator;
  if (kc) {
    for (const auto& b : cbasis) {
      for (int y = 0; y < d && kc; ++y) {
        Rational s = 0;
        for (int x = 0; x < d; ++x) s += b[x] * gamma(x, y);
        kc = is_zero(reduce(ring, s));
      }
    }
  }
  r.kernel_is_commutator = kc;
  bool rg = true;
  for (const auto& p : zbasis)
    for (const auto& q : zbasis) {
      Rational a = 0, b = 0;
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
          a += p[x] * q[y] * gamma(x, y);
          b += p[x] * q[y] * gm(x, y);
        }
      rg = rg && is_zero(reduce(ring, a - b));
    }
  r.restricts_to_g = rg;
  return r;
}

}  // namespace pachner
