#include "pachner/contraction.hpp"

#include <algorithm>
#include <climits>
#include <string>
#include <unordered_map>

namespace pachner {
namespace {

struct Gf2Coef {
  using T = std::uint8_t;
  static T from(const Rational& q) { return is_zero(q) ? 0 : 1; }
  static Rational to(T v) { return Rational(v); }
  static bool zero(T v) { return v == 0; }
  static T mul(T a, T b) { return a & b; }
  static void add_to(T& a, const T& b) { a ^= b; }
  static T negate(const T& a) { return a; }
};

struct QCoef {
  using T = Rational;
  static T from(const Rational& q) { return q; }
  static Rational to(const T& v) { return v; }
  static bool zero(const T& v) { return sgn(v) == 0; }
  static T mul(const T& a, const T& b) { return a * b; }
  static void add_to(T& a, const T& b) { a += b; }
  static T negate(const T& a) { return -a; }
};

using Key = std::string;

Key key_of(const Index& idx) {
  Key k(idx.size(), '\0');
  for (std::size_t i = 0; i < idx.size(); ++i) k[i] = static_cast<char>(idx[i]);
  return k;
}

inline int at(const Key& k, std::size_t i) { return static_cast<unsigned char>(k[i]); }

struct PairPos {
  int first;   // position in the combined leg list
  int second;
};

// Parity of moving each pair to the front in turn, consuming it.
int consumption_parity(const std::vector<int>& odd, const std::vector<PairPos>& pairs,
                       std::vector<int>& scratch) {
  scratch.clear();
  for (int i = 0; i < static_cast<int>(odd.size()); ++i) scratch.push_back(i);
  int parity = 0;
  for (const auto& p : pairs) {
    for (int target : {p.first, p.second}) {
      int before = 0;
      std::size_t j = 0;
      for (; j < scratch.size() && scratch[j] != target; ++j) before += odd[scratch[j]];
      if (odd[target]) parity ^= (before & 1);
      scratch.erase(scratch.begin() + static_cast<long>(j));
    }
  }
  return parity;
}

template <class C>
GradedTensor run(const ContractionNetwork& net, const GradedTensor& ginv) {
  using T = typename C::T;
  const GradedBasis& basis = ginv.basis();
  const int dim = basis.size();
  const Ring ring = ginv.ring();
  if (dim > 255) throw Error("contraction supports at most 255 basis vectors");

  bool any_odd = false;
  for (int i = 0; i < dim; ++i) any_odd |= (basis.degree(i) & 1) != 0;
  const bool signed_mode = (ring == Ring::Q) && any_odd;

  std::vector<T> g(static_cast<std::size_t>(dim) * dim);
  std::vector<std::vector<int>> row_nz(dim), col_nz(dim);
  for (const auto& [idx, v] : ginv.entries()) {
    g[static_cast<std::size_t>(idx[0]) * dim + idx[1]] = C::from(v);
    row_nz[idx[0]].push_back(idx[1]);
    col_nz[idx[1]].push_back(idx[0]);
  }
  auto gval = [&](int a, int b) -> const T& { return g[static_cast<std::size_t>(a) * dim + b]; };

  const int n_nodes = static_cast<int>(net.nodes.size());
  std::vector<int> offset(n_nodes + 1, 0);
  int result_degree = 0;
  for (int k = 0; k < n_nodes; ++k) {
    const GradedTensor* t = net.nodes[k];
    if (!t) throw Error("null node in contraction network");
    if (!(t->basis() == basis)) throw Error("basis mismatch in contraction network");
    if (t->ring() != ring) throw Error("ring mismatch in contraction network");
    offset[k + 1] = offset[k] + t->arity();
    result_degree += t->degree();
  }
  const int total = offset[n_nodes];
  auto leg_id = [&](const Leg& l) {
    if (l.node < 0 || l.node >= n_nodes || l.slot < 0 || l.slot >= net.nodes[l.node]->arity())
      throw Error("leg out of range in contraction network");
    return offset[l.node] + l.slot;
  };

  std::vector<int> partner(total, -1);
  std::vector<char> is_first(total, 0);
  std::vector<char> used(total, 0);
  for (const auto& [a, b] : net.edges) {
    int ia = leg_id(a), ib = leg_id(b);
    if (ia == ib || used[ia] || used[ib]) throw Error("leg used twice in contraction network");
    used[ia] = used[ib] = 1;
    partner[ia] = ib;
    partner[ib] = ia;
    is_first[ia] = 1;
  }
  for (const auto& l : net.open) {
    int id = leg_id(l);
    if (used[id]) throw Error("leg used twice in contraction network");
    used[id] = 1;
  }
  for (int i = 0; i < total; ++i) {
    if (!used[i]) throw Error("dangling leg in contraction network");
  }

  std::vector<int> legs;  // global leg ids of the partial result, in order
  std::unordered_map<Key, T> partial;
  partial.emplace(Key(), T(1));

  std::vector<int> odd;
  std::vector<int> scratch;
  for (int k = 0; k < n_nodes; ++k) {
    const GradedTensor& node = *net.nodes[k];
    if (node.is_zero()) return GradedTensor(ginv.basis_ptr(), ring, static_cast<int>(net.open.size()), result_degree);
    const int ar = node.arity();
    const int base = static_cast<int>(legs.size());
    std::vector<int> pos_in_partial(total, -1);
    for (int i = 0; i < base; ++i) pos_in_partial[legs[i]] = i;

    std::vector<PairPos> pairs;
    struct Link {
      int slot;
      int partial_pos;
      bool partial_is_first;
    };
    std::vector<Link> links;
    std::vector<std::pair<int, int>> self_pairs;  // (first slot, second slot)
    std::vector<char> consumed(base + ar, 0);
    for (int s = 0; s < ar; ++s) {
      int id = offset[k] + s;
      int p = partner[id];
      if (p < 0) continue;
      if (pos_in_partial[p] >= 0) {
        int pp = pos_in_partial[p];
        links.push_back({s, pp, is_first[p] != 0});
        if (is_first[p])
          pairs.push_back({pp, base + s});
        else
          pairs.push_back({base + s, pp});
        consumed[pp] = consumed[base + s] = 1;
      } else if (p >= offset[k] && p < offset[k + 1] && is_first[id]) {
        int s2 = p - offset[k];
        self_pairs.emplace_back(s, s2);
        pairs.push_back({base + s, base + s2});
        consumed[base + s] = consumed[base + s2] = 1;
      }
    }
    std::vector<int> keep;
    std::vector<int> new_legs;
    for (int i = 0; i < base + ar; ++i) {
      if (consumed[i]) continue;
      keep.push_back(i);
      new_legs.push_back(i < base ? legs[i] : offset[k] + (i - base));
    }

    // Bucket node entries by their indices on linked slots.
    std::unordered_map<Key, std::vector<std::pair<Key, T>>> buckets;
    for (const auto& [idx, v] : node.entries()) {
      Key lk(links.size(), '\0');
      for (std::size_t j = 0; j < links.size(); ++j) lk[j] = static_cast<char>(idx[links[j].slot]);
      buckets[lk].emplace_back(key_of(idx), C::from(v));
    }

    std::unordered_map<Key, T> next;
    Key combined(base + ar, '\0');
    Key lookup(links.size(), '\0');
    std::vector<const std::vector<int>*> cand(links.size());
    std::vector<std::size_t> choice(links.size());
    for (const auto& [pk, pv] : partial) {
      bool empty = false;
      for (std::size_t j = 0; j < links.size(); ++j) {
        int x = at(pk, links[j].partial_pos);
        cand[j] = links[j].partial_is_first ? &row_nz[x] : &col_nz[x];
        if (cand[j]->empty()) empty = true;
        choice[j] = 0;
      }
      if (empty) continue;
      std::copy(pk.begin(), pk.end(), combined.begin());
      while (true) {
        for (std::size_t j = 0; j < links.size(); ++j) lookup[j] = static_cast<char>((*cand[j])[choice[j]]);
        auto it = buckets.find(lookup);
        if (it != buckets.end()) {
          for (const auto& [nk, nv] : it->second) {
            std::copy(nk.begin(), nk.end(), combined.begin() + base);
            T w = C::mul(pv, nv);
            for (const auto& pr : pairs) {
              const T& gv = gval(at(combined, pr.first), at(combined, pr.second));
              if (C::zero(gv)) {
                w = T(0);
                break;
              }
              w = C::mul(w, gv);
            }
            if (C::zero(w)) continue;
            if (signed_mode && !pairs.empty()) {
              odd.resize(combined.size());
              for (std::size_t i = 0; i < combined.size(); ++i) odd[i] = basis.degree(at(combined, i)) & 1;
              if (consumption_parity(odd, pairs, scratch)) w = C::negate(w);
            }
            Key out(keep.size(), '\0');
            for (std::size_t i = 0; i < keep.size(); ++i) out[i] = combined[keep[i]];
            auto [slot, inserted] = next.try_emplace(std::move(out), w);
            if (!inserted) C::add_to(slot->second, w);
          }
        }
        std::size_t j = 0;
        for (; j < links.size(); ++j) {
          if (++choice[j] < cand[j]->size()) break;
          choice[j] = 0;
        }
        if (j == links.size()) break;
      }
    }
    for (auto it = next.begin(); it != next.end();) {
      if (C::zero(it->second))
        it = next.erase(it);
      else
        ++it;
    }
    partial = std::move(next);
    legs = std::move(new_legs);
    if (partial.empty()) break;
  }

  const int n_open = static_cast<int>(net.open.size());
  GradedTensor out(ginv.basis_ptr(), ring, n_open, result_degree);
  if (partial.empty()) return out;
  std::vector<int> pos(total, -1);
  for (int i = 0; i < static_cast<int>(legs.size()); ++i) pos[legs[i]] = i;
  std::vector<int> perm(n_open);
  for (int i = 0; i < n_open; ++i) perm[i] = pos[leg_id(net.open[i])];
  std::vector<int> degs(legs.size());
  for (const auto& [pk, pv] : partial) {
    Index idx(n_open);
    for (int i = 0; i < n_open; ++i) idx[i] = at(pk, perm[i]);
    T v = pv;
    if (signed_mode) {
      for (std::size_t i = 0; i < legs.size(); ++i) degs[i] = basis.degree(at(pk, i));
      if (koszul_sign(degs, perm) < 0) v = C::negate(v);
    }
    out.set(idx, C::to(v));
  }
  return out;
}

// Same network with nodes ordered greedily so that the partial result keeps
// few open legs: each step adds the node that shrinks (or least grows) the
// open leg count. Every start node is tried; the smallest peak width wins.
ContractionNetwork reordered(const ContractionNetwork& net) {
  const int n = static_cast<int>(net.nodes.size());
  if (n <= 2) return net;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : net.edges) {
    if (a.node < 0 || a.node >= n || b.node < 0 || b.node >= n) return net;
    if (a.node != b.node) {
      adj[a.node].push_back(b.node);
      adj[b.node].push_back(a.node);
    }
  }
  std::vector<int> self(n, 0);
  for (const auto& [a, b] : net.edges)
    if (a.node == b.node) self[a.node] += 2;
  std::vector<int> best_order;
  std::pair<int, long> best_cost{INT_MAX, LONG_MAX};
  for (int start = 0; start < n; ++start) {
    std::vector<int> order{start}, links(n, 0);
    std::vector<char> placed(n, 0);
    placed[start] = 1;
    for (int m : adj[start]) ++links[m];
    int width = net.nodes[start]->arity() - self[start];
    std::pair<int, long> cost{width, width};
    while (static_cast<int>(order.size()) < n) {
      int pick = -1, pick_delta = 0;
      for (int k = 0; k < n; ++k) {
        if (placed[k]) continue;
        const int delta = net.nodes[k]->arity() - self[k] - 2 * links[k];
        if (pick < 0 || delta < pick_delta || (delta == pick_delta && links[k] > links[pick])) {
          pick = k;
          pick_delta = delta;
        }
      }
      placed[pick] = 1;
      order.push_back(pick);
      for (int m : adj[pick]) ++links[m];
      width += pick_delta;
      cost.first = std::max(cost.first, width);
      cost.second += width;
    }
    if (cost < best_cost) {
      best_cost = cost;
      best_order = order;
    }
  }
  std::vector<int> where(n);
  for (int i = 0; i < n; ++i) where[best_order[i]] = i;
  ContractionNetwork out;
  for (int k : best_order) out.nodes.push_back(net.nodes[k]);
  auto mv = [&](const Leg& l) { return Leg{where[l.node], l.slot}; };
  for (const auto& [a, b] : net.edges) out.edges.emplace_back(mv(a), mv(b));
  for (const auto& l : net.open) {
    if (l.node < 0 || l.node >= n) return net;
    out.open.push_back(mv(l));
  }
  return out;
}

}  // namespace

GradedTensor contract(const ContractionNetwork& network, const GradedTensor& metric_inverse) {
  if (metric_inverse.arity() != 2) throw Error("metric inverse must have arity 2");
  for (const auto* t : network.nodes)
    if (!t) throw Error("null node in contraction network");
  const ContractionNetwork net = reordered(network);
  if (metric_inverse.ring() == Ring::GF2) return run<Gf2Coef>(net, metric_inverse);
  return run<QCoef>(net, metric_inverse);
}

}  // namespace pachner
