#pragma once

#include <optional>
#include <vector>

#include "pachner/matrix.hpp"

namespace pachner {

/// a·x >= b, a·x = b, or a·x > b.
struct LinearConstraint {
  enum Kind { GE, EQ, GT };
  std::vector<Rational> a;
  Rational b;
  Kind kind = GE;
};

/// Result of maximizing a common margin eps <= 1 on the strict rows.
struct MarginResult {
  bool feasible = false;  // non-strict part consistent and, if strict rows exist, eps > 0
  std::vector<Rational> x;
  Rational margin;
};

/// Fourier-Motzkin elimination in variable order 0..n-1 with eps kept last;
/// equalities are substituted when they involve the variable. Throws when the
/// row count passes `cap`.
MarginResult fm_max_margin(int n, const std::vector<LinearConstraint>& rows, std::size_t cap = 20000);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational value;
};

/// maximize c·x subject to A x = b, x >= 0; two-phase simplex with Bland's rule.
LpResult simplex_standard(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c);

/// Same problem as fm_max_margin, solved with the simplex method.
MarginResult simplex_max_margin(int n, const std::vector<LinearConstraint>& rows);

}  // namespace pachner
