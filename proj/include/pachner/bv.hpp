#pragma once

#include <string>
#include <vector>

#include "pachner/flip_complex.hpp"
#include "pachner/state_sum.hpp"

namespace pachner {

/// X ∘ Y for cylinder chains: Y below, X on top (stack(Y, X) per pair of cells). GF2 only.
Chain compose(const Chain& x, const Chain& y);

/// Cylinder chain relabelled by T_i on the out-circle.
Chain apply_T(const Chain& c, int i);

/// Precomposition X ∘ T_i: cyclic relabeling of the in-circle.
Surface precompose_T(const Surface& cylinder, int i);

struct BvCycle {
  Chain chain;
  int k = 0;
  bool odd_k = false;  // cycle property holds, square-bounding is not claimed
};

/// Sum over i < k and 1 <= j <= k of T_i[R^{j-1} S L^{k-j}]. Over Q each
/// strip is oriented from the corner i_j of its S square.
BvCycle build_c_delta(int k, Ring ring = Ring::GF2);

/// Sum over l < k/2 and 2 <= j <= k of T_{2l}[S R^{j-2} S L^{k-j}].
Chain build_D(int k);

/// B_s = D ∘ ... ∘ D ∘ c_delta (s - 1 copies of D), k = 2.
Chain build_B(int s, int k = 2);

struct ChainCheck {
  bool ok = false;
  std::size_t lhs_size = 0;
  std::size_t rhs_size = 0;
  std::string detail;
};

/// boundary(D ∘ c) == c ∘ c over GF2, boundaries computed cell by cell.
ChainCheck verify_square_bounds(int k);

/// boundary(B_s) == sum_{0<s'<s} B_{s'} ∘ B_{s-s'} for every s <= order (k = 2).
std::vector<ChainCheck> verify_mc(int order);

/// Z on the k = 1 single-square cylinder: t(x, y) = sum c4(x, a, y, b) ginv(a, b).
GradedTensor naive_bv(const CyclicAInfty& v);

GradedTensor bv_operator(const CyclicAInfty& v, const Chain& cycle);

struct SquareReport {
  bool square_closed = false;
  bool witness_found = false;
  bool square_zero = false;
  std::size_t op_entries = 0;
  std::size_t square_entries = 0;
};

/// op ∘ op is Q-closed and Q-exact (q_exact_witness).
SquareReport check_square_q_exact(const GradedTensor& op, int k, const CyclicAInfty& v);

struct MaurerCartanReport {
  bool ok = true;
  std::vector<bool> per_order;  // the u^s coefficient of Delta_infinity^2 vanishes
  std::vector<std::size_t> entries;  // nonzero entries of Z(B_s)
};

/// (Q + sum_{s<=order} u^s Z(B_s))^2 = 0 mod u^{order+1}, k = 2.
MaurerCartanReport delta_infinity(const CyclicAInfty& v, int order);

/// a ∘ c ∘ b for cylinders a, b with T_{-1} (b∘a) T_1 = b∘a; throws otherwise.
Chain dress(const Surface& a, const Chain& c, const Surface& b);

/// Whether the cycle bounds in the full flip complex of the k-strip (GF2).
struct NontrivialityReport {
  bool complex_built = false;
  bool bounds = false;
  std::vector<long> fvector;
};
NontrivialityReport c_delta_nontriviality(int k, std::size_t max_cells);

}  // namespace pachner
