#include "pachner/tensor.hpp"

#include <set>

namespace pachner {

GradedBasis::GradedBasis(std::vector<BasisElement> elements) : elements_(std::move(elements)) {
  std::set<std::string> seen;
  for (const auto& e : elements_) {
    if (!seen.insert(e.label).second) throw Error("duplicate basis label '" + e.label + "'");
  }
}

int GradedBasis::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (elements_[i].label == label) return i;
  }
  return -1;
}

BasisPtr make_basis(std::vector<BasisElement> elements) {
  return std::make_shared<const GradedBasis>(std::move(elements));
}

int koszul_sign(const std::vector<int>& old_degrees, const std::vector<int>& perm) {
  int parity = 0;
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i) {
    if ((old_degrees[perm[i]] & 1) == 0) continue;
    for (int j = i + 1; j < n; ++j) {
      if ((old_degrees[perm[j]] & 1) && perm[j] < perm[i]) parity ^= 1;
    }
  }
  return parity ? -1 : 1;
}

bool degrees_match(Ring ring, long a, long b) {
  if (ring == Ring::GF2) return ((a - b) % 2) == 0;
  return a == b;
}

GradedTensor::GradedTensor(BasisPtr basis, Ring ring, int arity, int degree)
    : basis_(std::move(basis)), ring_(ring), arity_(arity), degree_(degree) {
  if (!basis_) throw Error("tensor without basis");
  if (arity < 0) throw Error("negative arity");
}

void GradedTensor::check_index(const Index& idx) const {
  if (static_cast<int>(idx.size()) != arity_) throw Error("index length does not match arity");
  for (int i : idx) {
    if (i < 0 || i >= basis_->size()) throw Error("basis index out of range");
  }
}

int GradedTensor::index_degree(const Index& idx) const {
  int s = 0;
  for (int i : idx) s += basis_->degree(i);
  return s;
}

bool GradedTensor::degree_allows(const Index& idx) const {
  return degrees_match(ring_, index_degree(idx), -degree_);
}

Rational GradedTensor::at(const Index& idx) const {
  auto it = entries_.find(idx);
  return it == entries_.end() ? Rational(0) : it->second;
}

void GradedTensor::set(const Index& idx, const Rational& value) {
  check_index(idx);
  Rational v = reduce(ring_, value);
  if (pachner::is_zero(v)) {
    entries_.erase(idx);
    return;
  }
  if (!degree_allows(idx)) {
    throw Error("coefficient violates declared degree " + std::to_string(degree_));
  }
  entries_[idx] = v;
}

void GradedTensor::accumulate(const Index& idx, const Rational& value) {
  if (pachner::is_zero(value)) return;
  set(idx, add(ring_, at(idx), value));
}

GradedTensor GradedTensor::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != arity_) throw Error("permutation size mismatch");
  GradedTensor out(basis_, ring_, arity_, degree_);
  std::vector<int> degs(arity_);
  for (const auto& [idx, v] : entries_) {
    Index nidx(arity_);
    for (int i = 0; i < arity_; ++i) {
      nidx[i] = idx[perm[i]];
      degs[i] = basis_->degree(idx[i]);
    }
    int s = (ring_ == Ring::Q) ? koszul_sign(degs, perm) : 1;
    out.entries_[nidx] = s > 0 ? v : Rational(-v);
  }
  return out;
}

bool GradedTensor::same_shape(const GradedTensor& other) const {
  return ring_ == other.ring_ && arity_ == other.arity_ && *basis_ == *other.basis_;
}

GradedTensor GradedTensor::operator+(const GradedTensor& other) const {
  if (!same_shape(other)) throw Error("adding tensors of different shape");
  GradedTensor out = *this;
  for (const auto& [idx, v] : other.entries_) out.accumulate(idx, v);
  return out;
}

GradedTensor GradedTensor::operator-(const GradedTensor& other) const {
  return *this + other.scaled(Rational(-1));
}

GradedTensor GradedTensor::scaled(const Rational& factor) const {
  GradedTensor out(basis_, ring_, arity_, degree_);
  for (const auto& [idx, v] : entries_) out.set(idx, mul(ring_, v, reduce(ring_, factor)));
  return out;
}

bool GradedTensor::operator==(const GradedTensor& other) const {
  return same_shape(other) && entries_ == other.entries_;
}

std::vector<Index> GradedTensor::all_indices(const GradedBasis& basis, Ring ring, int arity,
                                             int degree) {
  std::vector<Index> out;
  Index idx(arity, 0);
  const int n = basis.size();
  if (n == 0 && arity > 0) return out;
  while (true) {
    long s = 0;
    for (int i : idx) s += basis.degree(i);
    if (degrees_match(ring, s, -degree)) out.push_back(idx);
    int pos = arity - 1;
    while (pos >= 0 && idx[pos] == n - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

}  // namespace pachner
