#include "snprnet/draft.hpp"

#include "snprnet/errors.hpp"

namespace snprnet {

namespace {

[[noreturn]] void invalid(const std::string& why) {
  throw Error(ErrorCode::InvalidSuboperation, why);
}

}  // namespace

GraphDraft::GraphDraft(const PhyloNetwork& net)
    : vertices_(net.vertex_count()), labels_(net.vertex_count()) {
  edges_.reserve(net.edge_count() + 6);
  for (const Edge& e : net.edges()) edges_.push_back({e.tail, e.head, true});
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto& dv = vertices_[v];
    for (EdgeId e : net.out_edges(v)) dv.out[dv.out_degree++] = e;
    for (EdgeId e : net.in_edges(v)) dv.in[dv.in_degree++] = e;
    labels_[v] = net.label(v);
  }
}

void GraphDraft::check_edge(EdgeId e) const {
  if (!edge_alive(e)) invalid("edge " + std::to_string(e) + " does not exist in the draft");
}

void GraphDraft::check_vertex(VertexId v) const {
  if (v >= vertices_.size() || !vertices_[v].alive) {
    invalid("vertex " + std::to_string(v) + " does not exist in the draft");
  }
}

std::span<const EdgeId> GraphDraft::out_edges(VertexId v) const {
  return {vertices_[v].out.data(), vertices_[v].out_degree};
}

std::span<const EdgeId> GraphDraft::in_edges(VertexId v) const {
  return {vertices_[v].in.data(), vertices_[v].in_degree};
}

void GraphDraft::attach(EdgeId e) {
  const auto& ed = edges_[e];
  if (ed.tail != kNoVertex) {
    auto& t = vertices_[ed.tail];
    if (t.out_degree == 2) invalid("vertex " + std::to_string(ed.tail) + " would exceed out-degree two");
    t.out[t.out_degree++] = e;
  }
  auto& h = vertices_[ed.head];
  if (h.in_degree == 2) invalid("vertex " + std::to_string(ed.head) + " would exceed in-degree two");
  h.in[h.in_degree++] = e;
}

void GraphDraft::detach_out(VertexId v, EdgeId e) {
  auto& dv = vertices_[v];
  if (dv.out_degree > 0 && dv.out[0] == e) dv.out[0] = dv.out[1];
  dv.out[1] = kNoEdge;
  --dv.out_degree;
}

void GraphDraft::detach_in(VertexId v, EdgeId e) {
  auto& dv = vertices_[v];
  if (dv.in_degree > 0 && dv.in[0] == e) dv.in[0] = dv.in[1];
  dv.in[1] = kNoEdge;
  --dv.in_degree;
}

void GraphDraft::remove_edge(EdgeId e) {
  check_edge(e);
  auto& ed = edges_[e];
  if (ed.tail != kNoVertex) detach_out(ed.tail, e);
  detach_in(ed.head, e);
  ed.alive = false;
}

EdgeId GraphDraft::add_edge(VertexId tail, VertexId head) {
  if (tail != kNoVertex) check_vertex(tail);
  check_vertex(head);
  edges_.push_back({tail, head, true});
  EdgeId e = static_cast<EdgeId>(edges_.size() - 1);
  attach(e);
  return e;
}

VertexId GraphDraft::subdivide(EdgeId e) {
  check_edge(e);
  if (is_half_edge(e)) invalid("cannot subdivide a half edge");
  const VertexId u = edges_[e].tail, w = edges_[e].head;
  remove_edge(e);
  vertices_.push_back({});
  labels_.emplace_back();
  VertexId x = static_cast<VertexId>(vertices_.size() - 1);
  add_edge(u, x);
  add_edge(x, w);
  return x;
}

EdgeId GraphDraft::suppress(VertexId v) {
  check_vertex(v);
  const auto& dv = vertices_[v];
  if (dv.in_degree != 1 || dv.out_degree != 1) {
    invalid("vertex " + std::to_string(v) + " has in-degree " + std::to_string(dv.in_degree) +
            " and out-degree " + std::to_string(dv.out_degree) + ", not one and one");
  }
  const EdgeId in = dv.in[0], out = dv.out[0];
  if (edges_[in].tail == kNoVertex) invalid("cannot suppress the head of a half edge");
  const VertexId u = edges_[in].tail, w = edges_[out].head;
  remove_edge(in);
  remove_edge(out);
  vertices_[v].alive = false;
  return add_edge(u, w);
}

EdgeId GraphDraft::prune(EdgeId e) {
  check_edge(e);
  if (is_half_edge(e)) invalid("edge " + std::to_string(e) + " is already pruned");
  const VertexId u = edges_[e].tail;
  if (vertices_[u].in_degree != 1 || vertices_[u].out_degree != 2) {
    invalid("tail of edge " + std::to_string(e) + " is not an inner tree vertex");
  }
  detach_out(u, e);
  edges_[e].tail = kNoVertex;
  return suppress(u);
}

VertexId GraphDraft::regraft(EdgeId half_edge, EdgeId target) {
  check_edge(half_edge);
  check_edge(target);
  if (!is_half_edge(half_edge)) invalid("edge " + std::to_string(half_edge) + " is not a half edge");
  if (is_half_edge(target)) invalid("cannot regraft onto a half edge");
  VertexId x = subdivide(target);
  edges_[half_edge].tail = x;
  auto& dx = vertices_[x];
  dx.out[dx.out_degree++] = half_edge;
  return x;
}

PhyloNetwork GraphDraft::finalize() const {
  std::vector<VertexId> remap(vertices_.size(), kNoVertex);
  VertexId next = 0;
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].alive) remap[v] = next++;
  }
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto& ed = edges_[e];
    if (!ed.alive) continue;
    if (ed.tail == kNoVertex) invalid("edge " + std::to_string(e) + " is still a half edge");
    edges.push_back({remap[ed.tail], remap[ed.head]});
  }
  std::vector<std::string> labels(next);
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (remap[v] != kNoVertex) labels[remap[v]] = labels_[v];
  }
  return build_network_dense(next, std::move(edges), std::move(labels));
}

PhyloNetwork suboperate(const PhyloNetwork& net, std::span<const SubAction> actions) {
  GraphDraft draft(net);
  for (const auto& action : actions) {
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, subop::Suppress>) {
            draft.suppress(a.vertex);
          } else if constexpr (std::is_same_v<T, subop::Subdivide>) {
            draft.subdivide(a.edge);
          } else if constexpr (std::is_same_v<T, subop::Prune>) {
            draft.prune(a.edge);
          } else {
            draft.regraft(a.half_edge, a.target);
          }
        },
        action);
  }
  return draft.finalize();
}

}  // namespace snprnet
