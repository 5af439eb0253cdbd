#pragma once

#include <utility>
#include <vector>

#include "pachner/tensor.hpp"

namespace pachner {

struct Leg {
  int node = 0;
  int slot = 0;

  bool operator==(const Leg&) const = default;
};

/// Tensor network: every leg is either one end of an internal edge (weighted
/// by the inverse metric, first leg in its first slot) or open.
///
/// Sign convention over Q: the value for a full index assignment carries the
/// Koszul sign of reordering the concatenated legs (nodes in list order, each
/// in slot order) into (edge_0.first, edge_0.second, edge_1.first, ..., open
/// legs in the given order). Edge pairs have even total degree, so the edge
/// order does not matter.
struct ContractionNetwork {
  std::vector<const GradedTensor*> nodes;
  std::vector<std::pair<Leg, Leg>> edges;
  std::vector<Leg> open;
};

GradedTensor contract(const ContractionNetwork& network, const GradedTensor& metric_inverse);

}  // namespace pachner
