#pragma once

#include <optional>
#include <vector>

#include "pachner/matrix.hpp"
#include "pachner/tensor.hpp"

namespace pachner {

/// Singular pairing; `witness` is a nonzero kernel vector.
class MetricError : public Error {
 public:
  MetricError(const std::string& what, std::vector<Rational> witness)
      : Error(what), witness(std::move(witness)) {}
  std::vector<Rational> witness;
};

Matrix tensor_to_matrix(const GradedTensor& t);
GradedTensor matrix_to_tensor(const Matrix& m, const BasisPtr& basis, int degree);

GradedTensor invert_metric(const GradedTensor& g);

/// Q as an endomorphism of degree +1: Q(e_b) = sum_a Q(a,b) e_a.
bool is_square_zero(const Matrix& q);

/// Induced differential on dual tensors:
///   (Qt)(x_1..x_n) = -(-1)^{deg t} sum_i (-1)^{|x_1|+..+|x_{i-1}|} t(x_1,..,Qx_i,..,x_n).
GradedTensor apply_Q(const GradedTensor& t, const Matrix& q);

/// Some s with apply_Q(s) = t, or nullopt. Throws if t is not Q-closed.
std::optional<GradedTensor> q_exact_witness(const GradedTensor& t, const Matrix& q);

}  // namespace pachner
