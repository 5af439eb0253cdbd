#pragma once

#include <map>
#include <string>
#include <vector>

#include "pachner/cyclic_ainfty.hpp"
#include "pachner/formal_series.hpp"
#include "pachner/secondary_polytope.hpp"

namespace pachner {

/// Coordinates of the given points translated so the lexicographically smallest
/// one is the origin, sorted, as "x,y;x,y;...".
std::string configuration_key(const PointConfiguration& a, const std::vector<int>& points);

/// Cyclic A-infinity algebra plus operations for configurations with floating
/// points. The operation of a configuration has one slot per hull edge,
/// counter-clockwise from the lexicographically smallest hull vertex, and
/// degree 3 - (number of points).
struct AhatAlgebra {
  CyclicAInfty base;
  std::map<std::string, GradedTensor> extra;
  /// Unlisted configurations with floating points get the zero operation.
  bool floating_zero = false;

  void add_op(const PointConfiguration& points, const GradedTensor& t);
  /// Throws naming the configuration when no operation is available.
  GradedTensor op_for_cell(const PointConfiguration& a, const std::vector<int>& cell) const;
};

/// Every floating-point operation zero.
AhatAlgebra strict_ahat(const CyclicAInfty& v);

/// Contraction of the cell operations with the inverse metric on interior
/// edges. Open legs: hull edges of Conv(A), counter-clockwise from the
/// lexicographically smallest hull point.
GradedTensor model2_Z(const PointConfiguration& a, const MarkedSubdivision& s, const AhatAlgebra& v);

struct FaceTerm {
  std::string subdivision;
  int incidence = 0;
  bool zero = true;
};

struct Model2Report {
  std::string status = "pass";
  std::vector<long> checked;  // per face dimension
  long failure_count = 0;
  std::vector<std::string> failures;
  /// Terms of the top face, for reporting.
  std::vector<FaceTerm> top_terms;
  bool top_lhs_zero = true;
};

/// apply_Q(Z(face)) + sum over covered faces of [face : facet] Z(facet) = 0 for
/// every face of sp(A). Incidences are geometric over Q and ignored over GF2.
Model2Report model2_check(const SecondaryPolytope& sp, const AhatAlgebra& v);
/// The same identity at the top face only.
Model2Report verify_ahat_relation(const SecondaryPolytope& sp, const AhatAlgebra& v);

/// Endomorphisms U_n of degree -n over Q[T]/T^{N+1}; U[0] is U. Missing U_n are zero.
struct SP1Algebra {
  std::vector<int> degrees;
  Matrix Q;
  std::vector<MatrixSeries> U;
  int order = 0;

  int dim() const { return static_cast<int>(degrees.size()); }
  MatrixSeries u(int n) const;
};

struct SP1Report {
  std::string status = "pass";
  std::vector<std::pair<int, bool>> per_n;
  int failing_n = -1;
  std::string witness;
};

/// Checks Q^2 = 0, degrees, and for n <= n_max
///   Q U_n - (-1)^n U_n Q = sum_{i<n} (-1)^i (U_i U_{n-1-i} - U_{n-1}).
SP1Report sp1_verify(const SP1Algebra& a, int n_max);

/// U = exp(TH), U_1 = G (exp(2TH) - exp(TH)) / H, U_{>=2} = 0 with H = QG + GQ.
SP1Algebra sp1_from_continuum(const std::vector<int>& degrees, const Matrix& q, const Matrix& g, int order);

/// Relations among G_0 = H, G_1 = G, G_2, ... (G_n of degree -n, missing ones
/// zero) for every index up to n_max. Rejects GF2.
SP1Report infinitesimal_sp1_verify(const std::vector<int>& degrees, const Matrix& q, const std::vector<Matrix>& g,
                                   int n_max);

/// Product of U_{floating count} over the cells, the leftmost cell's factor first.
MatrixSeries htqm_Z(const PointConfiguration& a, const MarkedSubdivision& s, const SP1Algebra& alg);

struct HtqmReport {
  std::string status = "pass";
  long faces = 0;
  long failure_count = 0;
  std::vector<std::string> failures;
};

/// [Q, Z(face)] = sum_p (-1)^p (Z(p becomes a breakpoint) - Z(p omitted)) over
/// the floating points p of the face, numbered left to right.
HtqmReport htqm_check(const SecondaryPolytope& sp, const SP1Algebra& alg);

}  // namespace pachner
