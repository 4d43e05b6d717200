#pragma once

// Rooted binary phylogenetic networks with a pendant root.
//
// A PhyloNetwork is an immutable value. Vertices and edges are addressed by dense
// integer ids (VertexId, EdgeId) that are only meaningful relative to the network
// they came from; two networks are compared by canonical form (see canon.hpp),
// never by id. Edges form an indexed multiset, so the two sides of a parallel pair
// are separately addressable.
//
// Vertex roles follow from degrees:
//   root          in 0, out 1
//   leaf          in 1, out 0   (carries a unique taxon label)
//   inner tree    in 1, out 2
//   reticulation  in 2, out 1
// which forces m = 2n + 3r - 1 edges for n leaves and r reticulations.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace snprnet {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

enum class VertexRole : std::uint8_t { Root, Leaf, InnerTree, Reticulation };

struct Edge {
  VertexId tail;
  VertexId head;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// (tail, head, k) addresses the k-th copy of a possibly parallel edge.
struct EdgeHandle {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  std::uint32_t multiplicity = 0;
  friend auto operator<=>(const EdgeHandle&, const EdgeHandle&) = default;
};

enum class EdgePosition : std::uint8_t { Root, Inner, LeafIncident };

struct EdgeClass {
  bool reticulation_edge = false;  // head is a reticulation
  bool pure = false;               // both endpoints tree vertices, or both reticulations
  EdgePosition position = EdgePosition::Inner;

  bool tree_edge() const { return !reticulation_edge; }
  friend bool operator==(const EdgeClass&, const EdgeClass&) = default;
};

class PhyloNetwork;

namespace detail {
PhyloNetwork build_impl(std::size_t vertex_count, std::vector<Edge> edges,
                        std::vector<std::string> labels,
                        const std::function<std::string(VertexId)>& vertex_name);
}  // namespace detail

class PhyloNetwork {
 public:
  std::size_t vertex_count() const { return roles_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::size_t leaf_count() const { return leaves_.size(); }
  std::size_t reticulation_count() const { return reticulations_.size(); }

  VertexRole role(VertexId v) const { return roles_[v]; }
  // Root, leaves and inner tree vertices.
  bool is_tree_vertex(VertexId v) const { return roles_[v] != VertexRole::Reticulation; }
  bool is_reticulation(VertexId v) const { return roles_[v] == VertexRole::Reticulation; }
  bool is_leaf(VertexId v) const { return roles_[v] == VertexRole::Leaf; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  VertexId tail(EdgeId e) const { return edges_[e].tail; }
  VertexId head(EdgeId e) const { return edges_[e].head; }
  bool is_reticulation_edge(EdgeId e) const { return is_reticulation(edges_[e].head); }

  std::span<const EdgeId> out_edges(VertexId v) const {
    return {adjacency_[v].out.data(), adjacency_[v].out_degree};
  }
  std::span<const EdgeId> in_edges(VertexId v) const {
    return {adjacency_[v].in.data(), adjacency_[v].in_degree};
  }
  std::size_t out_degree(VertexId v) const { return adjacency_[v].out_degree; }
  std::size_t in_degree(VertexId v) const { return adjacency_[v].in_degree; }

  VertexId root() const { return root_; }
  EdgeId root_edge() const { return adjacency_[root_].out[0]; }
  std::span<const VertexId> leaves() const { return leaves_; }
  std::span<const VertexId> reticulations() const { return reticulations_; }

  // Empty for non-leaves.
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find_leaf(const std::string& label) const;
  // Sorted taxon names.
  std::vector<std::string> taxa() const;

  // Every vertex appears after all of its parents.
  std::span<const VertexId> topological_order() const { return topo_order_; }

  // The other out-edge of tail(e), if tail(e) has two children.
  std::optional<EdgeId> sibling_edge(EdgeId e) const;

  EdgeHandle handle(EdgeId e) const;
  std::optional<EdgeId> find_edge(const EdgeHandle& h) const;

  bool contains_vertex(VertexId v) const { return v < roles_.size(); }
  bool contains_edge(EdgeId e) const { return e < edges_.size(); }

 private:
  struct Slots {
    std::array<EdgeId, 2> out{kNoEdge, kNoEdge};
    std::array<EdgeId, 2> in{kNoEdge, kNoEdge};
    std::uint8_t out_degree = 0;
    std::uint8_t in_degree = 0;
  };

  friend PhyloNetwork detail::build_impl(std::size_t, std::vector<Edge>,
                                         std::vector<std::string>,
                                         const std::function<std::string(VertexId)>&);

  std::vector<VertexRole> roles_;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<Slots> adjacency_;
  std::vector<VertexId> leaves_;
  std::vector<VertexId> reticulations_;
  std::vector<VertexId> topo_order_;
  VertexId root_ = kNoVertex;
};

// Validating constructor over arbitrary vertex identifiers. Dense ids are assigned
// in order of first appearance in the edge list. Throws Error with one of
// DegreeViolation, CyclicGraph, UnreachableVertex, DuplicateLeafLabel,
// NoPendantRoot, MissingLeafLabel, TooFewLeaves.
PhyloNetwork build_network(std::span<const std::pair<std::uint64_t, std::uint64_t>> edges,
                           const std::map<std::uint64_t, std::string>& leaf_labels);

// Same checks, for callers that already hold dense ids 0..vertex_count-1.
// labels[v] must be nonempty exactly for leaves.
PhyloNetwork build_network_dense(std::size_t vertex_count, std::vector<Edge> edges,
                                 std::vector<std::string> labels);

bool is_tree_child(const PhyloNetwork& net);

EdgeClass classify_edge(const PhyloNetwork& net, EdgeId e);

// True iff a directed path of tree edges leads from v to a leaf.
bool has_tree_path(const PhyloNetwork& net, VertexId v);
// has_tree_path for every vertex at once.
std::vector<bool> tree_path_flags(const PhyloNetwork& net);

// Number of edges that are descendants of e; e itself is not counted.
std::size_t descendant_edge_count(const PhyloNetwork& net, EdgeId e);
// As above, restricted to tree edges.
std::size_t tree_descendant_edge_count(const PhyloNetwork& net, EdgeId e);

struct DescendantCounts {
  std::vector<std::uint64_t> all;   // indexed by EdgeId
  std::vector<std::uint64_t> tree;  // indexed by EdgeId
};
// Both counts for every edge in one pass.
DescendantCounts descendant_counts(const PhyloNetwork& net);

// True iff f is a descendant edge of e: tail(f) == head(e) or tail(f) is a
// descendant of head(e).
bool is_descendant_edge(const PhyloNetwork& net, EdgeId e, EdgeId f);
// Vertices reachable from v, including v.
std::vector<bool> reachable_from(const PhyloNetwork& net, VertexId v);

}  // namespace snprnet
