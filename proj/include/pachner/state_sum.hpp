#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "pachner/cyclic_ainfty.hpp"
#include "pachner/flip_complex.hpp"
#include "pachner/surface.hpp"

namespace pachner {

/// Covariant tensor on the boundary legs of a surface, legs in
/// Surface::boundary_legs order.
struct StateValue {
  GradedTensor tensor;
  std::vector<BoundaryLeg> legs;
};

/// One c_n node per face (slots in face order from the face's first dart),
/// the inverse metric on every interior edge, boundary legs open.
StateValue evaluate_Z(const Surface& s, const CyclicAInfty& v);

/// Memoized Z on canonical representatives.
class ZCache {
 public:
  explicit ZCache(const CyclicAInfty& v) : v_(v) {}
  const GradedTensor& get(const CanonicalCode& code, const Surface& canonical_rep);
  std::size_t size() const { return map_.size(); }

 private:
  const CyclicAInfty& v_;
  std::unordered_map<CanonicalCode, GradedTensor> map_;
};

GradedTensor zero_value(const Surface& s, const CyclicAInfty& v, int degree);

/// Linear extension of Z. An empty chain gives an empty default tensor.
GradedTensor evaluate_on_chain(const Chain& chain, const CyclicAInfty& v, ZCache* cache = nullptr);

/// apply_Q(Z(cell)) + sum of signed Z over the cell's faces.
GradedTensor closedness_defect(const Surface& canonical_rep, const CyclicAInfty& v, ZCache& cache);

struct ClosednessReport {
  std::string status = "pass";
  int through_dim = 0;
  std::vector<long> checked;  // per dimension
  long skipped = 0;
  std::vector<std::string> failures;  // first few, with witness coefficient
  long failure_count = 0;
};

/// Over Q only cells of dimension <= 2 are checked; higher ones count as skipped.
ClosednessReport check_closedness(const FlipComplex& fc, const CyclicAInfty& v, int through_dim);

/// Cylinder composition of values: out-legs of `first` paired with in-legs of
/// `second` (o_a -> o_b meets i_b -> i_a) through the inverse metric.
StateValue compose_cylinders(const StateValue& first, const StateValue& second, const CyclicAInfty& v);
GradedTensor compose_cylinder_tensors(const GradedTensor& first, const GradedTensor& second, int k,
                                      const CyclicAInfty& v);

struct FunctorialityReport {
  bool ok = false;
  std::string detail;
};

/// Z(stack(first, second)) against the composition of the two values.
FunctorialityReport check_functoriality(const Surface& first, const Surface& second, const CyclicAInfty& v);

/// |Hom(pi_1(closed genus h), G)| / |G| by brute force.
Rational dw_brute(const GroupTable& g, int genus);
/// |G|^{2h-2} sum_R dim(R)^{2-2h}.
Rational dw_from_irreps(int order, const std::vector<int>& dims, int genus);
/// Z of a closed surface with the group algebra equals |G|^chi times the
/// Dijkgraaf-Witten value; this returns that factor's inverse applied.
Rational dw_normalized(const Rational& state_sum, int group_order, int chi);

struct CenterReduction {
  int dim_commutator = 0;
  int dim_center = 0;
  Matrix projector;  // onto the g-orthogonal complement of [V,V], along [V,V]
  std::vector<std::vector<Rational>> center_basis;
  bool direct = false;
  /// The cylinder pairing tr(a -> x(ay)) has kernel [V,V] and agrees with g on the complement.
  bool kernel_is_commutator = false;
  bool restricts_to_g = false;
};

CenterReduction center_reduction(const CyclicAInfty& v);

}  // namespace pachner
