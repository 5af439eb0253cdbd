#include "pachner/linear_program.hpp"

#include <map>

namespace pachner {

namespace {

// Row over variables 0..n (n is eps): coef·x >= rhs (or = rhs).
struct Row {
  std::vector<Rational> coef;
  Rational rhs;
};

void normalize(Row& r, bool allow_negative) {
  for (const auto& c : r.coef) {
    if (is_zero(c)) continue;
    Rational s = abs(c);
    if (allow_negative && sgn(c) < 0) s = -s;
    for (auto& x : r.coef) x /= s;
    r.rhs /= s;
    return;
  }
}

bool all_zero(const Row& r, int from) {
  for (std::size_t i = from; i < r.coef.size(); ++i)
    if (!is_zero(r.coef[i])) return false;
  return true;
}

struct Stage {
  bool substituted = false;
  Row eq;  // substitution row (coef at k nonzero)
  std::vector<Row> lower, upper;
};

Rational eval_rest(const Row& r, int k, const std::vector<Rational>& x) {
  Rational s = r.rhs;
  for (std::size_t j = 0; j < r.coef.size(); ++j)
    if (static_cast<int>(j) != k && !is_zero(r.coef[j])) s -= r.coef[j] * x[j];
  return s / r.coef[k];
}

}  // namespace

MarginResult fm_max_margin(int n, const std::vector<LinearConstraint>& rows, std::size_t cap) {
  const int eps = n;
  std::vector<Row> ineq, eqs;
  bool any_strict = false;
  for (const auto& c : rows) {
    if (static_cast<int>(c.a.size()) != n) throw Error("constraint has the wrong length");
    Row r{std::vector<Rational>(c.a.begin(), c.a.end()), c.b};
    r.coef.push_back(0);
    if (c.kind == LinearConstraint::GT) {
      r.coef[eps] = -1;
      any_strict = true;
    }
    (c.kind == LinearConstraint::EQ ? eqs : ineq).push_back(r);
  }
  {
    Row cap_row{std::vector<Rational>(n + 1), -1};
    cap_row.coef[eps] = -1;
    ineq.push_back(cap_row);
  }
  std::vector<Stage> stages(n);
  for (int k = 0; k < n; ++k) {
    Stage& st = stages[k];
    int pick = -1;
    for (int i = 0; i < static_cast<int>(eqs.size()); ++i)
      if (!is_zero(eqs[i].coef[k])) {
        pick = i;
        break;
      }
    if (pick >= 0) {
      st.substituted = true;
      st.eq = eqs[pick];
      eqs.erase(eqs.begin() + pick);
      auto sub = [&](Row& r) {
        if (is_zero(r.coef[k])) return;
        Rational f = r.coef[k] / st.eq.coef[k];
        for (int j = 0; j <= n; ++j) r.coef[j] -= f * st.eq.coef[j];
        r.rhs -= f * st.eq.rhs;
      };
      for (auto& r : eqs) sub(r);
      for (auto& r : ineq) sub(r);
    } else {
      std::vector<Row> keep;
      for (auto& r : ineq) {
        int s = sgn(r.coef[k]);
        if (s > 0)
          st.lower.push_back(r);
        else if (s < 0)
          st.upper.push_back(r);
        else
          keep.push_back(r);
      }
      for (const auto& p : st.lower) {
        for (const auto& q : st.upper) {
          Rational fp = -q.coef[k], fq = p.coef[k];
          Row r{std::vector<Rational>(n + 1), fp * p.rhs + fq * q.rhs};
          for (int j = 0; j <= n; ++j) r.coef[j] = fp * p.coef[j] + fq * q.coef[j];
          r.coef[k] = 0;
          keep.push_back(r);
        }
      }
      // Deduplicate: same direction keeps the tightest right-hand side.
      std::map<std::vector<Rational>, Rational> best;
      bool contradiction = false;
      for (auto& r : keep) {
        normalize(r, false);
        if (all_zero(r, 0)) {
          if (sgn(r.rhs) > 0) contradiction = true;
          continue;
        }
        auto [it, inserted] = best.emplace(r.coef, r.rhs);
        if (!inserted && r.rhs > it->second) it->second = r.rhs;
      }
      if (contradiction) return MarginResult{};
      ineq.clear();
      for (auto& [c, b] : best) ineq.push_back(Row{c, b});
      if (ineq.size() > cap) throw Error("Fourier-Motzkin row count exceeds cap");
    }
    for (auto& r : eqs) {
      if (all_zero(r, 0) && !is_zero(r.rhs)) return MarginResult{};
    }
  }
  // Only eps remains.
  std::optional<Rational> lo, hi;
  for (const auto& r : ineq) {
    const Rational& c = r.coef[eps];
    if (is_zero(c)) {
      if (sgn(r.rhs) > 0) return MarginResult{};
      continue;
    }
    Rational v = r.rhs / c;
    if (sgn(c) > 0) {
      if (!lo || v > *lo) lo = v;
    } else if (!hi || v < *hi) {
      hi = v;
    }
  }
  for (const auto& r : eqs) {
    if (is_zero(r.coef[eps])) {
      if (!is_zero(r.rhs)) return MarginResult{};
      continue;
    }
    Rational v = r.rhs / r.coef[eps];
    if ((lo && v < *lo) || (hi && v > *hi)) return MarginResult{};
    lo = hi = v;
  }
  if (lo && hi && *lo > *hi) return MarginResult{};
  MarginResult res;
  Rational e = hi ? *hi : Rational(1);
  res.margin = e;
  res.feasible = !any_strict || sgn(e) > 0;
  if (!res.feasible) return res;
  std::vector<Rational> x(n + 1);
  x[eps] = e;
  for (int k = n - 1; k >= 0; --k) {
    const Stage& st = stages[k];
    if (st.substituted) {
      x[k] = eval_rest(st.eq, k, x);
      continue;
    }
    std::optional<Rational> l, h;
    for (const auto& r : st.lower) {
      Rational v = eval_rest(r, k, x);
      if (!l || v > *l) l = v;
    }
    for (const auto& r : st.upper) {
      Rational v = eval_rest(r, k, x);
      if (!h || v < *h) h = v;
    }
    if (l && h)
      x[k] = (*l + *h) / 2;
    else if (l)
      x[k] = *l;
    else if (h)
      x[k] = *h;
    else
      x[k] = 0;
  }
  x.pop_back();
  res.x = std::move(x);
  return res;
}

namespace {

// Dense tableau: rows 0..m-1 constraints, last row objective (reduced costs).
struct Tableau {
  int m, n;  // n columns excluding rhs
  std::vector<std::vector<Rational>> t;
  std::vector<int> basis;

  void pivot(int r, int c) {
    Rational p = t[r][c];
    for (auto& v : t[r]) v /= p;
    for (int i = 0; i <= m; ++i) {
      if (i == r || is_zero(t[i][c])) continue;
      Rational f = t[i][c];
      for (int j = 0; j <= n; ++j)
        if (!is_zero(t[r][j])) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Maximize: objective row holds -c_j + ...; enter on negative entries.
  bool run(const std::vector<char>& allowed) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && sgn(t[m][j]) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        Rational ratio = t[i][n] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult simplex_standard(const Matrix& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const int m = a.rows(), n = a.cols();
  if (static_cast<int>(b.size()) != m || static_cast<int>(c.size()) != n) throw Error("simplex dimension mismatch");
  Tableau tb{m, n + m, {}, std::vector<int>(m)};
  tb.t.assign(m + 1, std::vector<Rational>(n + m + 1));
  for (int i = 0; i < m; ++i) {
    bool flip = sgn(b[i]) < 0;
    for (int j = 0; j < n; ++j) tb.t[i][j] = flip ? Rational(-a(i, j)) : a(i, j);
    tb.t[i][n + i] = 1;
    tb.t[i][n + m] = flip ? Rational(-b[i]) : b[i];
    tb.basis[i] = n + i;
  }
  // Phase 1: maximize -sum(artificial).
  for (int j = 0; j <= n + m; ++j) {
    Rational s = 0;
    for (int i = 0; i < m; ++i)
      if (j < n || j == n + m) s += tb.t[i][j];
    tb.t[m][j] = j < n || j == n + m ? Rational(-s) : Rational(0);
  }
  std::vector<char> allowed(n + m, 1);
  tb.run(allowed);
  LpResult res;
  if (sgn(tb.t[m][n + m]) != 0) return res;
  // Drive artificials out of the basis.
  for (int i = 0; i < m; ++i) {
    if (tb.basis[i] < n) continue;
    for (int j = 0; j < n; ++j)
      if (!is_zero(tb.t[i][j])) {
        tb.pivot(i, j);
        break;
      }
  }
  for (int j = n; j < n + m; ++j) allowed[j] = 0;
  // Phase 2 objective row: -c plus basis corrections.
  for (int j = 0; j <= n + m; ++j) tb.t[m][j] = j < n ? Rational(-c[j]) : Rational(0);
  for (int i = 0; i < m; ++i) {
    int bj = tb.basis[i];
    if (bj >= n || is_zero(tb.t[m][bj])) continue;
    Rational f = tb.t[m][bj];
    for (int j = 0; j <= n + m; ++j) tb.t[m][j] -= f * tb.t[i][j];
  }
  if (!tb.run(allowed)) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  res.status = LpStatus::Optimal;
  res.x.assign(n, 0);
  for (int i = 0; i < m; ++i)
    if (tb.basis[i] < n) res.x[tb.basis[i]] = tb.t[i][n + m];
  res.value = 0;
  for (int j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

MarginResult simplex_max_margin(int n, const std::vector<LinearConstraint>& rows) {
  // Columns: x+ (n), x- (n), e+, e-, one slack per inequality row, plus a slack for e <= 1.
  int slacks = 1;
  for (const auto& r : rows)
    if (r.kind != LinearConstraint::EQ) ++slacks;
  const int cols = 2 * n + 2 + slacks;
  const int m = static_cast<int>(rows.size()) + 1;
  Matrix a(Ring::Q, m, cols);
  std::vector<Rational> b(m), c(cols);
  bool any_strict = false;
  int s = 2 * n + 2;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    const auto& r = rows[i];
    for (int j = 0; j < n; ++j) {
      a.set(i, j, r.a[j]);
      a.set(i, n + j, -r.a[j]);
    }
    if (r.kind == LinearConstraint::GT) {
      any_strict = true;
      a.set(i, 2 * n, -1);
      a.set(i, 2 * n + 1, 1);
    }
    if (r.kind != LinearConstraint::EQ) a.set(i, s++, -1);
    b[i] = r.b;
  }
  a.set(m - 1, 2 * n, 1);
  a.set(m - 1, 2 * n + 1, -1);
  a.set(m - 1, s, 1);
  b[m - 1] = 1;
  c[2 * n] = 1;
  c[2 * n + 1] = -1;
  LpResult lp = simplex_standard(a, b, c);
  MarginResult res;
  if (lp.status != LpStatus::Optimal) return res;
  res.margin = lp.value;
  res.feasible = !any_strict || sgn(lp.value) > 0;
  res.x.resize(n);
  for (int j = 0; j < n; ++j) res.x[j] = lp.x[j] - lp.x[n + j];
  return res;
}

}  // namespace pachner
