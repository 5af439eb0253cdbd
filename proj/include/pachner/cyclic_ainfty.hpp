#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pachner/matrix.hpp"
#include "pachner/tensor.hpp"

namespace pachner {

/// Cyclic A-infinity algebra in polygon form: c[n] is the arity-n tensor
/// c_n(x_0,..,x_{n-1}) = g(x_0, m_{n-1}(x_1,..,x_{n-1})) of degree 3 - n.
/// Missing c[n] with n <= n_max are zero.
struct CyclicAInfty {
  std::string name;
  Ring ring = Ring::Q;
  BasisPtr basis;
  GradedTensor g;
  GradedTensor ginv;
  Matrix Q;
  std::map<int, GradedTensor> c;
  int n_max = 6;

  GradedTensor c_or_zero(int n) const;
  bool vanishes(int n) const;
  bool strict() const;
  /// m_2 structure constants raised from c_3: m2[a][b][x] = coefficient of e_x in e_a e_b.
  std::vector<std::vector<std::vector<Rational>>> m2() const;
};

/// Checks degrees, Q^2 = 0, invertibility of g and Q-invariance of g; fills ginv.
CyclicAInfty make_algebra(std::string name, Ring ring, BasisPtr basis, GradedTensor g, Matrix q,
                          std::map<int, GradedTensor> c, int n_max = 6);

struct GroupTable {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> mul;  // mul[a][b] = index of a*b

  int order() const { return static_cast<int>(labels.size()); }
  int identity() const;
  int inverse(int a) const;
};

GroupTable cyclic_group(int n);
GroupTable symmetric_group3();
/// Throws if the table is not a group.
void check_group(const GroupTable& t);

using StructureConstants = std::vector<std::vector<std::vector<Rational>>>;

/// Metric tr(L_x L_y) derived from the product.
GradedTensor trace_metric(const BasisPtr& basis, Ring ring, const StructureConstants& m);

/// Strict algebra (Q = 0, c_n = 0 for n >= 4). Without `g` the trace metric
/// is used and must be nondegenerate.
CyclicAInfty from_strict_frobenius(std::string name, Ring ring, BasisPtr basis, const StructureConstants& m,
                                   std::optional<GradedTensor> g = std::nullopt);

/// Group algebra. Over GF2 the trace metric |G| delta_{xy,e} vanishes for
/// even |G|; then delta_{xy,e} itself is used.
CyclicAInfty from_group_algebra(const GroupTable& t, Ring ring, std::string name = "group");

/// Names: Z2, Z3, S3, trunc2 (x^2 = 0), trunc3 (x^3 = 0), M2, Cl1 (GF2 only,
/// u of degree 0, v of degree 1, v^2 = u), M11 (GF2 only, M2 with E12 and E21
/// odd).
CyclicAInfty builtin_algebra(const std::string& name, Ring ring);

/// Same tensors on a basis with new degrees; re-validated.
CyclicAInfty regrade(const CyclicAInfty& v, const std::vector<int>& degrees);

struct RelationReport {
  std::string status = "pass";  // pass | fail | skipped
  std::vector<std::pair<int, std::string>> per_n;  // polygon size -> status
  int failing_n = 0;
  std::string witness;
};

/// For every n-gon with 3 <= n <= n_max: apply_Q(c_n) + sum over diagonals of
/// the signed two-polygon contraction = 0. Over Q polygons with n >= 6 are
/// skipped unless every term vanishes.
RelationReport verify_relations(const CyclicAInfty& v, int n_max);

/// Rotation rule c(x_1,..,x_{N-1},x_0) = (-1)^{(N-1) + |x_0|(|x_1|+..)} c(x_0,..).
RelationReport verify_cyclicity(const CyclicAInfty& v);

GradedTensor rotate_once(const GradedTensor& t);

struct MinimalSearch {
  int orbits = 0;
  int cocycle_dimension = 0;
  long candidates = 0;
  std::vector<GradedTensor> solutions;  // nonzero, in lexicographic order
};

/// Nonzero cyclic c_4 of degree -1 over GF2 satisfying the polygon relations
/// through the hexagon with c_5 = c_6 = 0. Returns the lexicographically
/// first one.
std::optional<CyclicAInfty> find_minimal_m3(const CyclicAInfty& strict_v, MinimalSearch* info = nullptr);

}  // namespace pachner
