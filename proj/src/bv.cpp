#include "pachner/bv.hpp"

#include "pachner/surface_builders.hpp"
#include "pachner/tensor_ops.hpp"

namespace pachner {

namespace {

int in_circle(const Surface& s) {
  for (int c = 0; c < static_cast<int>(s.circles.size()); ++c)
    if (!s.circles[c].out) return c;
  throw Error("cylinder has no in-circle");
}

std::string word(char fill, int n) { return std::string(std::max(0, n), fill); }

}  // namespace

Chain compose(const Chain& x, const Chain& y) {
  if (x.ring != Ring::GF2 || y.ring != Ring::GF2) throw Error("chain composition is implemented over GF2");
  Chain out(Ring::GF2);
  for (const auto& [cy, vy] : y.coef)
    for (const auto& [cx, vx] : x.coef) out.add(stack(y.rep.at(cy), x.rep.at(cx)), vx * vy);
  return out;
}

Chain apply_T(const Chain& c, int i) {
  Chain out(c.ring);
  for (const auto& [code, v] : c.coef) out.add(shift_T(c.rep.at(code), i), v);
  return out;
}

Surface precompose_T(const Surface& cylinder, int i) { return relabel_T(cylinder, in_circle(cylinder), -i); }

BvCycle build_c_delta(int k, Ring ring) {
  if (k < 1) throw Error("c_delta needs k >= 1");
  BvCycle r;
  r.k = k;
  r.odd_k = k % 2 == 1;
  r.chain = Chain(ring);
  for (int i = 0; i < k; ++i) {
    for (int j = 1; j <= k; ++j) {
      Surface s = shift_T(strip(word('R', j - 1) + "S" + word('L', k - j)), i);
      r.chain.add(s, 1, {4 * (j - 1)});
    }
  }
  return r;
}

Chain build_D(int k) {
  if (k < 2 || k % 2) throw Error("D needs an even k >= 2");
  Chain d(Ring::GF2);
  for (int l = 0; l < k / 2; ++l)
    for (int j = 2; j <= k; ++j) d.add(shift_T(strip("S" + word('R', j - 2) + "S" + word('L', k - j)), 2 * l), 1);
  return d;
}

Chain build_B(int s, int k) {
  if (s < 1) throw Error("B_s needs s >= 1");
  Chain b = build_c_delta(k).chain;
  Chain d = build_D(k);
  for (int i = 1; i < s; ++i) b = compose(d, b);
  return b;
}

namespace {

ChainCheck compare(const Chain& lhs, const Chain& rhs) {
  ChainCheck c;
  c.lhs_size = lhs.size();
  c.rhs_size = rhs.size();
  c.ok = lhs == rhs;
  Chain diff = lhs + rhs;
  c.detail = c.ok ? "equal" : std::to_string(diff.size()) + " cells differ";
  return c;
}

}  // namespace

ChainCheck verify_square_bounds(int k) {
  Chain c = build_c_delta(k).chain;
  if (k % 2) throw Error("square bounding is only claimed for even k");
  return compare(chain_boundary(compose(build_D(k), c)), compose(c, c));
}

std::vector<ChainCheck> verify_mc(int order) {
  std::vector<Chain> b{Chain(Ring::GF2)};
  for (int s = 1; s <= order; ++s) b.push_back(build_B(s));
  std::vector<ChainCheck> out;
  for (int s = 1; s <= order; ++s) {
    Chain rhs(Ring::GF2);
    for (int t = 1; t < s; ++t) rhs = rhs + compose(b[t], b[s - t]);
    out.push_back(compare(chain_boundary(b[s]), rhs));
  }
  return out;
}

GradedTensor naive_bv(const CyclicAInfty& v) {
  if (v.n_max < 4) throw Error("naive BV operator needs c4");
  return evaluate_Z(strip("S"), v).tensor;
}

GradedTensor bv_operator(const CyclicAInfty& v, const Chain& cycle) {
  GradedTensor t = evaluate_on_chain(cycle, v);
  if (t.basis_ptr() == nullptr) throw Error("empty cycle");
  return t;
}

SquareReport check_square_q_exact(const GradedTensor& op, int k, const CyclicAInfty& v) {
  SquareReport r;
  GradedTensor sq = compose_cylinder_tensors(op, op, k, v);
  r.op_entries = op.entries().size();
  r.square_entries = sq.entries().size();
  r.square_zero = sq.is_zero();
  r.square_closed = apply_Q(sq, v.Q).is_zero();
  if (r.square_closed) r.witness_found = q_exact_witness(sq, v.Q).has_value();
  return r;
}

MaurerCartanReport delta_infinity(const CyclicAInfty& v, int order) {
  if (v.ring != Ring::GF2) throw Error("Delta_infinity is checked over GF2");
  MaurerCartanReport r;
  ZCache cache(v);
  std::vector<GradedTensor> z{GradedTensor()};
  for (int s = 1; s <= order; ++s) {
    z.push_back(evaluate_on_chain(build_B(s), v, &cache));
    r.entries.push_back(z.back().entries().size());
  }
  for (int s = 1; s <= order; ++s) {
    GradedTensor total = apply_Q(z[s], v.Q);
    for (int t = 1; t < s; ++t) {
      total = total + compose_cylinder_tensors(z[s - t], z[t], 2, v);
    }
    r.per_order.push_back(total.is_zero());
    r.ok = r.ok && total.is_zero();
  }
  return r;
}

Chain dress(const Surface& a, const Chain& c, const Surface& b) {
  Surface ba = stack(a, b);
  Surface rotated = shift_T(precompose_T(ba, 1), -1);
  if (canonical_code(rotated) != canonical_code(ba)) throw Error("dressing needs T_{-1} (b a) T_1 = b a");
  Chain ca(Ring::GF2), cb(Ring::GF2);
  ca.add(a, 1);
  cb.add(b, 1);
  return compose(compose(ca, c), cb);
}

NontrivialityReport c_delta_nontriviality(int k, std::size_t max_cells) {
  NontrivialityReport r;
  BuildOptions opt;
  opt.max_dim = 2;
  opt.max_cells = max_cells;
  FlipComplex fc;
  try {
    fc = build_flip_complex(strip(word('R', k)), opt);
  } catch (const CapExceeded&) {
    return r;
  }
  r.complex_built = true;
  r.fvector = fc.fvector();
  std::vector<int> z;
  for (const auto& [code, v] : build_c_delta(k).chain.coef) {
    int i = fc.find(code);
    if (i < 0) throw Error("c_delta cell missing from the built complex");
    z.push_back(i);
  }
  r.bounds = solve_boundary_gf2(fc, 1, z).has_value();
  return r;
}

}  // namespace pachner
