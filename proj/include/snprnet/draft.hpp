#pragma once

// Mutable scratch graph for the suboperations that rearrangements are built from:
// subdividing an edge, suppressing a degree-two vertex, pruning an edge into a
// half edge, and regrafting a half edge onto an edge. Intermediate states (degree
// two vertices, dangling half edges) only exist inside a draft; finalize() is the
// single way back to a validated PhyloNetwork.
//
// Draft ids start out equal to the source network's ids. New vertices and edges
// are appended; removed ones keep their slot, so ids stay stable for the life of
// the draft.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "snprnet/network.hpp"

namespace snprnet {

class GraphDraft {
 public:
  explicit GraphDraft(const PhyloNetwork& net);

  // Adds a vertex in the middle of e; e is removed and replaced by two edges.
  VertexId subdivide(EdgeId e);
  // Requires in-degree one and out-degree one. Returns the merged edge.
  EdgeId suppress(VertexId v);
  // Turns e = (u, v) into the half edge (., v) and suppresses u. Returns the edge
  // that replaced u's other two edges. The half edge keeps id e.
  EdgeId prune(EdgeId e);
  // Subdivides target and attaches the half edge below the new vertex.
  VertexId regraft(EdgeId half_edge, EdgeId target);
  void remove_edge(EdgeId e);
  EdgeId add_edge(VertexId tail, VertexId head);

  bool edge_alive(EdgeId e) const { return e < edges_.size() && edges_[e].alive; }
  bool is_half_edge(EdgeId e) const { return edge_alive(e) && edges_[e].tail == kNoVertex; }
  VertexId tail(EdgeId e) const { return edges_[e].tail; }
  VertexId head(EdgeId e) const { return edges_[e].head; }
  std::span<const EdgeId> out_edges(VertexId v) const;
  std::span<const EdgeId> in_edges(VertexId v) const;

  // Compacts ids (relative order preserved) and validates.
  PhyloNetwork finalize() const;

 private:
  struct DraftEdge {
    VertexId tail;
    VertexId head;
    bool alive;
  };
  struct DraftVertex {
    std::array<EdgeId, 2> out{kNoEdge, kNoEdge};
    std::array<EdgeId, 2> in{kNoEdge, kNoEdge};
    std::uint8_t out_degree = 0;
    std::uint8_t in_degree = 0;
    bool alive = true;
  };

  void check_edge(EdgeId e) const;
  void check_vertex(VertexId v) const;
  void attach(EdgeId e);
  void detach_out(VertexId v, EdgeId e);
  void detach_in(VertexId v, EdgeId e);

  std::vector<DraftEdge> edges_;
  std::vector<DraftVertex> vertices_;
  std::vector<std::string> labels_;
};

namespace subop {
struct Suppress {
  VertexId vertex;
};
struct Subdivide {
  EdgeId edge;
};
struct Prune {
  EdgeId edge;
};
struct Regraft {
  EdgeId half_edge;
  EdgeId target;
};
}  // namespace subop

using SubAction = std::variant<subop::Suppress, subop::Subdivide, subop::Prune, subop::Regraft>;

// Runs the actions in order on a draft of net (ids as described above) and
// finalizes. Invalid actions throw InvalidSuboperation; an invalid end state
// throws the corresponding validation error.
PhyloNetwork suboperate(const PhyloNetwork& net, std::span<const SubAction> actions);

}  // namespace snprnet
