#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pachner/ring.hpp"

namespace pachner {

struct BasisElement {
  std::string label;
  int degree = 0;

  bool operator==(const BasisElement&) const = default;
};

/// Ordered list of labelled, integer-graded basis vectors.
class GradedBasis {
 public:
  GradedBasis() = default;
  explicit GradedBasis(std::vector<BasisElement> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::string& label(int i) const { return elements_.at(i).label; }
  int degree(int i) const { return elements_.at(i).degree; }
  const std::vector<BasisElement>& elements() const { return elements_; }
  int index_of(std::string_view label) const;  // -1 if absent
  bool operator==(const GradedBasis& other) const { return elements_ == other.elements_; }

 private:
  std::vector<BasisElement> elements_;
};

using BasisPtr = std::shared_ptr<const GradedBasis>;

BasisPtr make_basis(std::vector<BasisElement> elements);

using Index = std::vector<int>;

/// Sign of reordering slots carrying the given degrees: `perm[i]` is the old
/// position of the symbol that ends up in position i. Only pairs of odd
/// symbols that swap order contribute.
int koszul_sign(const std::vector<int>& old_degrees, const std::vector<int>& perm);

/// Sparse dual tensor in (V*)^{⊗arity}. A tensor of degree d is supported on
/// index tuples whose slot degrees sum to -d (mod 2 over GF2).
class GradedTensor {
 public:
  GradedTensor() = default;
  GradedTensor(BasisPtr basis, Ring ring, int arity, int degree);

  Ring ring() const { return ring_; }
  int arity() const { return arity_; }
  int degree() const { return degree_; }
  const GradedBasis& basis() const { return *basis_; }
  const BasisPtr& basis_ptr() const { return basis_; }
  const std::map<Index, Rational>& entries() const { return entries_; }

  Rational at(const Index& idx) const;
  void set(const Index& idx, const Rational& value);
  void accumulate(const Index& idx, const Rational& value);

  bool is_zero() const { return entries_.empty(); }
  int index_degree(const Index& idx) const;
  bool degree_allows(const Index& idx) const;

  /// Slot i of the result is slot perm[i] of this tensor, with Koszul signs.
  GradedTensor permuted(const std::vector<int>& perm) const;

  GradedTensor operator+(const GradedTensor& other) const;
  GradedTensor operator-(const GradedTensor& other) const;
  GradedTensor scaled(const Rational& factor) const;

  bool same_shape(const GradedTensor& other) const;
  bool operator==(const GradedTensor& other) const;

  /// Every index tuple of the given arity allowed by `degree`, lexicographic.
  static std::vector<Index> all_indices(const GradedBasis& basis, Ring ring, int arity, int degree);

 private:
  void check_index(const Index& idx) const;

  BasisPtr basis_;
  Ring ring_ = Ring::Q;
  int arity_ = 0;
  int degree_ = 0;
  std::map<Index, Rational> entries_;
};

bool degrees_match(Ring ring, long a, long b);

}  // namespace pachner
