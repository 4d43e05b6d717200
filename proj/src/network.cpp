#include "snprnet/network.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "snprnet/errors.hpp"

namespace snprnet {

namespace {

std::string vertex_name(VertexId v) { return "vertex " + std::to_string(v); }

void check_edge(const PhyloNetwork& net, EdgeId e) {
  if (!net.contains_edge(e)) {
    throw Error(ErrorCode::UnknownEdge, "edge " + std::to_string(e) + " not in network");
  }
}

}  // namespace

std::optional<VertexId> PhyloNetwork::find_leaf(const std::string& label) const {
  for (VertexId v : leaves_) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

std::vector<std::string> PhyloNetwork::taxa() const {
  std::vector<std::string> out;
  out.reserve(leaves_.size());
  for (VertexId v : leaves_) out.push_back(labels_[v]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<EdgeId> PhyloNetwork::sibling_edge(EdgeId e) const {
  const auto& slots = adjacency_[edges_[e].tail];
  if (slots.out_degree != 2) return std::nullopt;
  return slots.out[0] == e ? slots.out[1] : slots.out[0];
}

EdgeHandle PhyloNetwork::handle(EdgeId e) const {
  const Edge& target = edges_[e];
  std::uint32_t k = 0;
  for (EdgeId other : out_edges(target.tail)) {
    if (other == e) break;
    if (edges_[other].head == target.head) ++k;
  }
  return {target.tail, target.head, k};
}

std::optional<EdgeId> PhyloNetwork::find_edge(const EdgeHandle& h) const {
  if (!contains_vertex(h.tail)) return std::nullopt;
  std::uint32_t k = 0;
  for (EdgeId e : out_edges(h.tail)) {
    if (edges_[e].head != h.head) continue;
    if (k == h.multiplicity) return e;
    ++k;
  }
  return std::nullopt;
}

namespace detail {

PhyloNetwork build_impl(std::size_t vertex_count, std::vector<Edge> edges,
                        std::vector<std::string> labels,
                        const std::function<std::string(VertexId)>& vertex_name) {
  PhyloNetwork net;
  labels.resize(vertex_count);
  net.adjacency_.assign(vertex_count, {});
  for (EdgeId e = 0; e < edges.size(); ++e) {
    const Edge& ed = edges[e];
    if (ed.tail >= vertex_count || ed.head >= vertex_count) {
      throw Error(ErrorCode::UnknownVertex, "edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (ed.tail == ed.head) {
      throw Error(ErrorCode::CyclicGraph, "self-loop at " + vertex_name(ed.tail));
    }
    auto& out = net.adjacency_[ed.tail];
    auto& in = net.adjacency_[ed.head];
    if (out.out_degree == 2) {
      throw Error(ErrorCode::DegreeViolation,
                  vertex_name(ed.tail) + " has out-degree greater than two");
    }
    if (in.in_degree == 2) {
      throw Error(ErrorCode::DegreeViolation,
                  vertex_name(ed.head) + " has in-degree greater than two");
    }
    out.out[out.out_degree++] = e;
    in.in[in.in_degree++] = e;
  }

  net.roles_.resize(vertex_count);
  std::vector<VertexId> roots;
  for (VertexId v = 0; v < vertex_count; ++v) {
    const auto& s = net.adjacency_[v];
    const int in = s.in_degree, out = s.out_degree;
    if (in == 0 && out == 1) {
      net.roles_[v] = VertexRole::Root;
      roots.push_back(v);
    } else if (in == 1 && out == 0) {
      net.roles_[v] = VertexRole::Leaf;
    } else if (in == 1 && out == 2) {
      net.roles_[v] = VertexRole::InnerTree;
    } else if (in == 2 && out == 1) {
      net.roles_[v] = VertexRole::Reticulation;
    } else if (in == 0 && out == 2) {
      throw Error(ErrorCode::NoPendantRoot,
                  vertex_name(v) + " is a source of out-degree two; a pendant root is required");
    } else {
      throw Error(ErrorCode::DegreeViolation, vertex_name(v) + " has in-degree " +
                                                  std::to_string(in) + " and out-degree " +
                                                  std::to_string(out));
    }
  }
  if (roots.size() != 1) {
    throw Error(ErrorCode::NoPendantRoot,
                "expected exactly one root, found " + std::to_string(roots.size()));
  }
  net.root_ = roots.front();

  std::set<std::string_view> seen;
  for (VertexId v = 0; v < vertex_count; ++v) {
    if (net.roles_[v] == VertexRole::Leaf) {
      if (labels[v].empty()) {
        throw Error(ErrorCode::MissingLeafLabel, "leaf " + vertex_name(v) + " has no label");
      }
      if (!seen.insert(labels[v]).second) {
        throw Error(ErrorCode::DuplicateLeafLabel, "label '" + labels[v] + "' used twice");
      }
      net.leaves_.push_back(v);
    } else {
      if (!labels[v].empty()) {
        throw Error(ErrorCode::DegreeViolation,
                    "labelled " + vertex_name(v) + " ('" + labels[v] + "') is not a leaf");
      }
      if (net.roles_[v] == VertexRole::Reticulation) net.reticulations_.push_back(v);
    }
  }

  // Kahn's algorithm from the root.
  std::vector<std::uint8_t> pending(vertex_count);
  for (VertexId v = 0; v < vertex_count; ++v) pending[v] = net.adjacency_[v].in_degree;
  net.topo_order_.reserve(vertex_count);
  net.topo_order_.push_back(net.root_);
  for (std::size_t i = 0; i < net.topo_order_.size(); ++i) {
    VertexId v = net.topo_order_[i];
    for (EdgeId e : net.out_edges(v)) {
      VertexId w = edges[e].head;
      if (--pending[w] == 0) net.topo_order_.push_back(w);
    }
  }
  if (net.topo_order_.size() != vertex_count) {
    // Unprocessed vertices either sit on a cycle or hang below one.
    for (VertexId v = 0; v < vertex_count; ++v) {
      if (pending[v] != 0) {
        throw Error(ErrorCode::CyclicGraph, vertex_name(v) + " lies on or below a directed cycle");
      }
    }
    throw Error(ErrorCode::UnreachableVertex, "some vertex is not reachable from the root");
  }

  if (net.leaves_.size() < 2) {
    throw Error(ErrorCode::TooFewLeaves, "a network needs at least two leaves");
  }
  const std::size_t n = net.leaves_.size(), r = net.reticulations_.size();
  if (edges.size() != 2 * n + 3 * r - 1) {
    throw Error(ErrorCode::DegreeViolation, "edge count does not equal 2n + 3r - 1");
  }

  net.edges_ = std::move(edges);
  net.labels_ = std::move(labels);
  return net;
}

}  // namespace detail

PhyloNetwork build_network_dense(std::size_t vertex_count, std::vector<Edge> edges,
                                 std::vector<std::string> labels) {
  return detail::build_impl(vertex_count, std::move(edges), std::move(labels), vertex_name);
}

PhyloNetwork build_network(std::span<const std::pair<std::uint64_t, std::uint64_t>> edges,
                           const std::map<std::uint64_t, std::string>& leaf_labels) {
  if (edges.empty()) throw Error(ErrorCode::TooFewLeaves, "empty edge list");
  std::unordered_map<std::uint64_t, VertexId> dense;
  std::vector<std::uint64_t> original;
  auto id_of = [&](std::uint64_t x) {
    auto [it, fresh] = dense.try_emplace(x, static_cast<VertexId>(original.size()));
    if (fresh) original.push_back(x);
    return it->second;
  };
  std::vector<Edge> dense_edges;
  dense_edges.reserve(edges.size());
  for (const auto& [t, h] : edges) {
    VertexId a = id_of(t);
    VertexId b = id_of(h);
    dense_edges.push_back({a, b});
  }
  std::vector<std::string> labels(original.size());
  for (const auto& [id, name] : leaf_labels) {
    auto it = dense.find(id);
    if (it == dense.end()) {
      throw Error(ErrorCode::UnreachableVertex,
                  "labelled vertex " + std::to_string(id) + " has no incident edge");
    }
    labels[it->second] = name;
  }
  return detail::build_impl(original.size(), std::move(dense_edges), std::move(labels),
                            [&](VertexId v) { return "vertex " + std::to_string(original[v]); });
}

bool is_tree_child(const PhyloNetwork& net) {
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    if (net.is_leaf(v)) continue;
    bool ok = false;
    for (EdgeId e : net.out_edges(v)) ok = ok || net.is_tree_vertex(net.head(e));
    if (!ok) return false;
  }
  return true;
}

EdgeClass classify_edge(const PhyloNetwork& net, EdgeId e) {
  check_edge(net, e);
  const auto [u, v] = net.edge(e);
  EdgeClass c;
  c.reticulation_edge = net.is_reticulation(v);
  c.pure = net.is_tree_vertex(u) == net.is_tree_vertex(v);
  if (net.role(u) == VertexRole::Root) {
    c.position = EdgePosition::Root;
  } else if (net.is_leaf(v)) {
    c.position = EdgePosition::LeafIncident;
  } else {
    c.position = EdgePosition::Inner;
  }
  return c;
}

std::vector<bool> tree_path_flags(const PhyloNetwork& net) {
  std::vector<bool> flag(net.vertex_count(), false);
  auto order = net.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    if (net.is_leaf(v)) {
      flag[v] = true;
      continue;
    }
    for (EdgeId e : net.out_edges(v)) {
      VertexId c = net.head(e);
      if (net.is_tree_vertex(c) && flag[c]) flag[v] = true;
    }
  }
  return flag;
}

bool has_tree_path(const PhyloNetwork& net, VertexId v) {
  if (!net.contains_vertex(v)) {
    throw Error(ErrorCode::UnknownVertex, vertex_name(v) + " not in network");
  }
  // Follow tree-vertex children depth first.
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    if (net.is_leaf(x)) return true;
    for (EdgeId e : net.out_edges(x)) {
      VertexId c = net.head(e);
      if (net.is_tree_vertex(c)) stack.push_back(c);
    }
  }
  return false;
}

std::vector<bool> reachable_from(const PhyloNetwork& net, VertexId v) {
  std::vector<bool> seen(net.vertex_count(), false);
  std::vector<VertexId> stack{v};
  seen[v] = true;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (EdgeId e : net.out_edges(x)) {
      VertexId c = net.head(e);
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  return seen;
}

bool is_descendant_edge(const PhyloNetwork& net, EdgeId e, EdgeId f) {
  check_edge(net, e);
  check_edge(net, f);
  if (e == f) return false;
  return reachable_from(net, net.head(e))[net.tail(f)];
}

namespace {

std::size_t count_below(const PhyloNetwork& net, EdgeId e, bool tree_only) {
  check_edge(net, e);
  auto seen = reachable_from(net, net.head(e));
  std::size_t count = 0;
  for (EdgeId f = 0; f < net.edge_count(); ++f) {
    if (!seen[net.tail(f)]) continue;
    if (tree_only && net.is_reticulation_edge(f)) continue;
    ++count;
  }
  return count;
}

}  // namespace

std::size_t descendant_edge_count(const PhyloNetwork& net, EdgeId e) {
  return count_below(net, e, false);
}

std::size_t tree_descendant_edge_count(const PhyloNetwork& net, EdgeId e) {
  return count_below(net, e, true);
}

}  // namespace snprnet
