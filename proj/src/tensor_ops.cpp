#include "pachner/tensor_ops.hpp"

#include "pachner/gf2_matrix.hpp"

namespace pachner {

Matrix tensor_to_matrix(const GradedTensor& t) {
  if (t.arity() != 2) throw Error("expected an arity 2 tensor");
  const int n = t.basis().size();
  Matrix m(t.ring(), n, n);
  for (const auto& [idx, v] : t.entries()) m.set(idx[0], idx[1], v);
  return m;
}

GradedTensor matrix_to_tensor(const Matrix& m, const BasisPtr& basis, int degree) {
  GradedTensor t(basis, m.ring(), 2, degree);
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) t.set({r, c}, m(r, c));
  return t;
}

GradedTensor invert_metric(const GradedTensor& g) {
  if (g.arity() != 2) throw Error("metric must have arity 2");
  if (g.degree() != 0) throw Error("metric must have degree 0");
  Matrix m = tensor_to_matrix(g);
  if (!(m == m.transposed())) throw Error("metric is not symmetric");
  auto inv = inverse(m);
  if (!inv) {
    auto w = kernel_vector(m);
    std::string msg = "metric is degenerate; kernel vector (";
    for (std::size_t i = 0; i < w->size(); ++i) msg += (i ? "," : "") + to_string((*w)[i]);
    throw MetricError(msg + ")", *w);
  }
  return matrix_to_tensor(*inv, g.basis_ptr(), 0);
}

bool is_square_zero(const Matrix& q) { return (q * q).is_zero(); }

GradedTensor apply_Q(const GradedTensor& t, const Matrix& q) {
  const GradedBasis& basis = t.basis();
  const int dim = basis.size();
  if (q.rows() != dim || q.cols() != dim) throw Error("Q has the wrong size");
  GradedTensor out(t.basis_ptr(), t.ring(), t.arity(), t.degree() + 1);
  // preimages[a] = {(b, Q(a,b))}: e_b maps onto e_a
  std::vector<std::vector<std::pair<int, Rational>>> pre(dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b)
      if (!is_zero(q(a, b))) pre[a].emplace_back(b, q(a, b));
  const Ring ring = t.ring();
  const Rational overall = neg(ring, sign_power(ring, t.degree()));
  std::map<Index, Rational> acc;
  for (const auto& [idx, v] : t.entries()) {
    int prefix = 0;
    for (int i = 0; i < t.arity(); ++i) {
      Rational s = mul(ring, overall, sign_power(ring, prefix));
      for (const auto& [b, qv] : pre[idx[i]]) {
        Index j = idx;
        j[i] = b;
        acc[j] += s * qv * v;
      }
      prefix += basis.degree(idx[i]);
    }
  }
  for (const auto& [idx, v] : acc) out.set(idx, v);
  return out;
}

std::optional<GradedTensor> q_exact_witness(const GradedTensor& t, const Matrix& q) {
  GradedTensor qt = apply_Q(t, q);
  if (!qt.is_zero()) {
    const auto& [idx, v] = *qt.entries().begin();
    std::string msg = "tensor is not Q-closed: Q(t)(";
    for (std::size_t i = 0; i < idx.size(); ++i) msg += (i ? "," : "") + t.basis().label(idx[i]);
    throw Error(msg + ") = " + to_string(v));
  }
  const Ring ring = t.ring();
  const int n = t.arity();
  GradedTensor zero(t.basis_ptr(), ring, n, t.degree() - 1);
  if (t.is_zero()) return zero;
  auto rows = GradedTensor::all_indices(t.basis(), ring, n, t.degree());
  auto cols = GradedTensor::all_indices(t.basis(), ring, n, t.degree() - 1);
  std::map<Index, int> row_of;
  for (std::size_t i = 0; i < rows.size(); ++i) row_of[rows[i]] = static_cast<int>(i);
  const int nr = static_cast<int>(rows.size());
  const int nc = static_cast<int>(cols.size());
  std::vector<GradedTensor> images;
  images.reserve(nc);
  for (const auto& c : cols) {
    GradedTensor e(t.basis_ptr(), ring, n, t.degree() - 1);
    e.set(c, 1);
    images.push_back(apply_Q(e, q));
  }
  GradedTensor s = zero;
  if (ring == Ring::GF2) {
    BitMatrix a(nr, nc);
    for (int j = 0; j < nc; ++j)
      for (const auto& [idx, v] : images[j].entries()) a.set(row_of.at(idx), j, true);
    std::vector<std::uint8_t> b(nr, 0);
    for (const auto& [idx, v] : t.entries()) b[row_of.at(idx)] = 1;
    auto x = gf2_solve(a, b);
    if (!x) return std::nullopt;
    for (int j = 0; j < nc; ++j)
      if ((*x)[j]) s.set(cols[j], 1);
  } else {
    Matrix a(ring, nr, nc);
    for (int j = 0; j < nc; ++j)
      for (const auto& [idx, v] : images[j].entries()) a.set(row_of.at(idx), j, v);
    std::vector<Rational> b(nr);
    for (const auto& [idx, v] : t.entries()) b[row_of.at(idx)] = v;
    auto x = solve(a, b);
    if (!x) return std::nullopt;
    for (int j = 0; j < nc; ++j)
      if (!is_zero((*x)[j])) s.set(cols[j], (*x)[j]);
  }
  return s;
}

}  // namespace pachner
