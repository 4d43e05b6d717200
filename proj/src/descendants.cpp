#include <cstdint>
#include <vector>

#include "snprnet/network.hpp"

// Bulk descendant-edge counts.
//
// Cutting every reticulation edge splits a network into tree components, each
// topped by the root or by a reticulation. The vertices below v are then v's own
// component subtree plus the full components of every reticulation reachable from
// v, and these pieces are disjoint. Component subtree sizes come from a tree DP;
// the reachable reticulation sets are persistent segment trees over reticulation
// indices carrying the component weights, merged bottom-up with subtree sharing.
// Nested reachability (chains of cycles) then costs O(log r) per vertex.

namespace snprnet {

namespace {

class ReticulationSets {
 public:
  using Ref = std::int32_t;
  static constexpr Ref kEmpty = 0;

  explicit ReticulationSets(std::vector<std::uint64_t> all_weight,
                            std::vector<std::uint64_t> tree_weight)
      : all_weight_(std::move(all_weight)), tree_weight_(std::move(tree_weight)) {
    nodes_.push_back({kEmpty, kEmpty, 0, 0});
  }

  Ref insert(Ref set, std::size_t index) { return insert(set, index, 0, size()); }

  Ref merge(Ref a, Ref b) { return merge(a, b, 0, size()); }

  std::uint64_t all_sum(Ref set) const { return nodes_[set].all; }
  std::uint64_t tree_sum(Ref set) const { return nodes_[set].tree; }

 private:
  struct Node {
    Ref left, right;
    std::uint64_t all, tree;
  };

  std::size_t size() const { return all_weight_.size(); }

  Ref make(Ref left, Ref right) {
    nodes_.push_back({left, right, nodes_[left].all + nodes_[right].all,
                      nodes_[left].tree + nodes_[right].tree});
    return static_cast<Ref>(nodes_.size() - 1);
  }

  Ref insert(Ref set, std::size_t index, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) {
      if (set != kEmpty) return set;
      nodes_.push_back({kEmpty, kEmpty, all_weight_[lo], tree_weight_[lo]});
      return static_cast<Ref>(nodes_.size() - 1);
    }
    std::size_t mid = lo + (hi - lo) / 2;
    Ref left = nodes_[set].left, right = nodes_[set].right;
    if (index < mid) {
      Ref updated = insert(left, index, lo, mid);
      return updated == left ? set : make(updated, right);
    }
    Ref updated = insert(right, index, mid, hi);
    return updated == right ? set : make(left, updated);
  }

  Ref merge(Ref a, Ref b, std::size_t lo, std::size_t hi) {
    if (a == b || b == kEmpty) return a;
    if (a == kEmpty) return b;
    if (hi - lo == 1) return a;
    std::size_t mid = lo + (hi - lo) / 2;
    Ref left = merge(nodes_[a].left, nodes_[b].left, lo, mid);
    Ref right = merge(nodes_[a].right, nodes_[b].right, mid, hi);
    if (left == nodes_[a].left && right == nodes_[a].right) return a;
    if (left == nodes_[b].left && right == nodes_[b].right) return b;
    return make(left, right);
  }

  std::vector<std::uint64_t> all_weight_;
  std::vector<std::uint64_t> tree_weight_;
  std::vector<Node> nodes_;
};

}  // namespace

DescendantCounts descendant_counts(const PhyloNetwork& net) {
  const std::size_t vertex_count = net.vertex_count();
  auto order = net.topological_order();

  // Edges whose tail lies in v's component subtree.
  std::vector<std::uint64_t> comp_all(vertex_count, 0), comp_tree(vertex_count, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    for (EdgeId e : net.out_edges(v)) {
      VertexId c = net.head(e);
      ++comp_all[v];
      if (net.is_tree_vertex(c)) {
        ++comp_tree[v];
        comp_all[v] += comp_all[c];
        comp_tree[v] += comp_tree[c];
      }
    }
  }

  std::vector<std::size_t> ret_index(vertex_count, 0);
  std::vector<std::uint64_t> ret_all, ret_tree;
  for (std::size_t i = 0; i < net.reticulation_count(); ++i) {
    VertexId h = net.reticulations()[i];
    ret_index[h] = i;
    ret_all.push_back(comp_all[h]);
    ret_tree.push_back(comp_tree[h]);
  }

  DescendantCounts out;
  out.all.assign(net.edge_count(), 0);
  out.tree.assign(net.edge_count(), 0);

  if (net.reticulation_count() == 0) {
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      out.all[e] = comp_all[net.head(e)];
      out.tree[e] = comp_tree[net.head(e)];
    }
    return out;
  }

  ReticulationSets sets(std::move(ret_all), std::move(ret_tree));
  // below[v]: reticulations strictly below v; with_self[v] adds v if v is one.
  std::vector<ReticulationSets::Ref> below(vertex_count, ReticulationSets::kEmpty);
  std::vector<ReticulationSets::Ref> with_self(vertex_count, ReticulationSets::kEmpty);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    ReticulationSets::Ref set = ReticulationSets::kEmpty;
    for (EdgeId e : net.out_edges(v)) set = sets.merge(set, with_self[net.head(e)]);
    below[v] = set;
    with_self[v] = net.is_reticulation(v) ? sets.insert(set, ret_index[v]) : set;
  }

  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    VertexId v = net.head(e);
    out.all[e] = comp_all[v] + sets.all_sum(below[v]);
    out.tree[e] = comp_tree[v] + sets.tree_sum(below[v]);
  }
  return out;
}

}  // namespace snprnet
