#include "snprnet/rearrange.hpp"

#include <algorithm>
#include <string>

#include "snprnet/canon.hpp"
#include "snprnet/census.hpp"
#include "snprnet/draft.hpp"
#include "snprnet/errors.hpp"

namespace snprnet {

namespace {

[[noreturn]] void ill_formed(const std::string& why) { throw Error(ErrorCode::IllFormedOp, why); }

std::string edge_text(const PhyloNetwork& net, EdgeId e) {
  return "edge " + std::to_string(e) + " (" + std::to_string(net.tail(e)) + "->" +
         std::to_string(net.head(e)) + ")";
}

void require_edge(const PhyloNetwork& net, EdgeId e, const char* role) {
  if (!net.contains_edge(e)) {
    ill_formed(std::string("operand ") + role + " is not an edge of the network");
  }
}

std::vector<std::vector<std::uint64_t>> reachability(const PhyloNetwork& net) {
  const std::size_t words = (net.vertex_count() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(net.vertex_count(),
                                                std::vector<std::uint64_t>(words, 0));
  auto order = net.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    auto& bits = reach[v];
    bits[v / 64] |= std::uint64_t{1} << (v % 64);
    for (EdgeId e : net.out_edges(v)) {
      const auto& child = reach[net.head(e)];
      for (std::size_t w = 0; w < words; ++w) bits[w] |= child[w];
    }
  }
  return reach;
}

bool reaches(const std::vector<std::vector<std::uint64_t>>& reach, VertexId from, VertexId to) {
  return (reach[from][to / 64] >> (to % 64)) & 1U;
}

// Checks everything apply needs for an SNPR-kind op; `descends(e, f)` answers
// whether f is a descendant edge of e.
template <class Descends>
void check_snpr_kind(const PhyloNetwork& net, const RearrangementOp& op, Descends descends) {
  require_edge(net, op.e, "e");
  switch (op.kind) {
    case OpKind::SNPR: {
      require_edge(net, op.f, "f");
      if (net.role(net.tail(op.e)) != VertexRole::InnerTree) {
        ill_formed("SNPR needs the tail of " + edge_text(net, op.e) + " to be an inner tree vertex");
      }
      if (op.f == op.e) ill_formed("SNPR needs f != e");
      if (descends(op.e, op.f)) {
        ill_formed(edge_text(net, op.f) + " is a descendant of " + edge_text(net, op.e));
      }
      return;
    }
    case OpKind::SNPRPlus: {
      require_edge(net, op.f, "f");
      if (net.is_reticulation(net.tail(op.e))) {
        ill_formed("SNPR+ needs the tail of " + edge_text(net, op.e) + " to be a tree vertex");
      }
      if (op.f != op.e && descends(op.e, op.f)) {
        ill_formed(edge_text(net, op.f) + " is a descendant of " + edge_text(net, op.e));
      }
      return;
    }
    case OpKind::SNPRMinus: {
      if (!net.is_reticulation_edge(op.e)) {
        ill_formed("SNPR- needs a reticulation edge, got " + edge_text(net, op.e));
      }
      if (!net.is_tree_vertex(net.tail(op.e)) || net.role(net.tail(op.e)) == VertexRole::Root) {
        throw Error(ErrorCode::WouldViolateDegree,
                    "deleting " + edge_text(net, op.e) + " leaves its tail without children");
      }
      return;
    }
    default:
      ill_formed("not an SNPR-kind op");
  }
}

PhyloNetwork apply_snpr_kind(const PhyloNetwork& net, const RearrangementOp& op) {
  check_snpr_kind(net, op, [&](EdgeId e, EdgeId f) { return is_descendant_edge(net, e, f); });
  GraphDraft draft(net);
  switch (op.kind) {
    case OpKind::SNPR: {
      const VertexId u = net.tail(op.e);
      const EdgeId parent = net.in_edges(u)[0];
      const EdgeId sibling = *net.sibling_edge(op.e);
      const EdgeId merged = draft.prune(op.e);
      draft.regraft(op.e, op.f == parent || op.f == sibling ? merged : op.f);
      break;
    }
    case OpKind::SNPRPlus: {
      if (op.f == op.e) {
        const VertexId upper = draft.subdivide(op.e);
        const VertexId lower = draft.subdivide(draft.out_edges(upper)[0]);
        draft.add_edge(upper, lower);
      } else {
        const VertexId upper = draft.subdivide(op.f);
        const VertexId lower = draft.subdivide(op.e);
        draft.add_edge(upper, lower);
      }
      break;
    }
    default: {
      draft.remove_edge(op.e);
      draft.suppress(net.tail(op.e));
      draft.suppress(net.head(op.e));
      break;
    }
  }
  return draft.finalize();
}

bool is_inner_edge(const PhyloNetwork& net, EdgeId e) {
  return net.role(net.tail(e)) != VertexRole::Root && !net.is_leaf(net.head(e));
}

// The edges f may be for axis e: its sibling if tail(e) is a tree vertex,
// otherwise a parent edge of tail(e).
std::vector<EdgeId> nni_f_candidates(const PhyloNetwork& net, EdgeId e) {
  const VertexId u = net.tail(e);
  if (net.is_reticulation(u)) {
    auto in = net.in_edges(u);
    return {in.begin(), in.end()};
  }
  if (auto sib = net.sibling_edge(e)) return {*sib};
  return {};
}

std::vector<EdgeId> nni_g_candidates(const PhyloNetwork& net, EdgeId e) {
  const VertexId v = net.head(e);
  std::vector<EdgeId> out;
  for (EdgeId g : net.in_edges(v)) {
    if (g != e) out.push_back(g);
  }
  for (EdgeId g : net.out_edges(v)) out.push_back(g);
  return out;
}

bool contains(const std::vector<EdgeId>& list, EdgeId e) {
  return std::find(list.begin(), list.end(), e) != list.end();
}

}  // namespace

std::string_view op_kind_name(OpKind kind) {
  switch (kind) {
    case OpKind::SNPR: return "SNPR";
    case OpKind::SNPRPlus: return "SNPR+";
    case OpKind::SNPRMinus: return "SNPR-";
    case OpKind::NNI: return "NNI";
    case OpKind::NNIPlus: return "NNI+";
    case OpKind::NNIMinus: return "NNI-";
  }
  return "?";
}

std::optional<OpKind> parse_op_kind(std::string_view name) {
  for (OpKind k : {OpKind::SNPR, OpKind::SNPRPlus, OpKind::SNPRMinus, OpKind::NNI,
                   OpKind::NNIPlus, OpKind::NNIMinus}) {
    if (op_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

PhyloNetwork apply(const PhyloNetwork& net, const RearrangementOp& op) {
  switch (op.kind) {
    case OpKind::NNI:
    case OpKind::NNIPlus:
    case OpKind::NNIMinus:
      return apply_nni(net, op);
    default:
      return apply_snpr_kind(net, op);
  }
}

bool is_well_formed(const PhyloNetwork& net, const RearrangementOp& op) {
  try {
    if (op.kind == OpKind::NNI || op.kind == OpKind::NNIPlus || op.kind == OpKind::NNIMinus) {
      nni_as_snpr(net, op);
    } else {
      check_snpr_kind(net, op, [&](EdgeId e, EdgeId f) { return is_descendant_edge(net, e, f); });
    }
  } catch (const Error&) {
    return false;
  }
  return true;
}

RespectingTester::RespectingTester(const PhyloNetwork& net)
    : net_(&net),
      reach_(reachability(net)),
      pure_sibling_(net.edge_count(), false),
      is_critical_(net.edge_count(), false),
      critical_partner_(net.edge_count(), kNoEdge) {
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (!is_pure_tree_edge(net, e)) continue;
    auto sib = net.sibling_edge(e);
    pure_sibling_[e] = sib && is_pure_tree_edge(net, *sib);
  }
  for (const CriticalStructure& s : find_critical_structures(net)) {
    is_critical_[s.critical] = true;
    critical_partner_[s.critical] = s.x_to_y;
  }
}

bool RespectingTester::descends(EdgeId e, EdgeId f) const {
  return reaches(reach_, net_->head(e), net_->tail(f));
}

bool RespectingTester::snpr(EdgeId e, EdgeId f) const {
  const PhyloNetwork& net = *net_;
  if (net.is_reticulation_edge(e)) return !net.is_reticulation_edge(f);
  if (!is_critical_[e]) return true;
  const VertexId u = net.tail(e);
  if (net.head(f) == u || net.tail(f) == u) return true;
  return critical_partner_[e] != kNoEdge && f == critical_partner_[e];
}

bool RespectingTester::snpr_plus(EdgeId e, EdgeId f) const {
  return pure_sibling_[e] && f != e && !net_->is_reticulation_edge(f) && !descends(e, f);
}

bool RespectingTester::snpr_minus(EdgeId e) const { return net_->is_reticulation_edge(e); }

bool RespectingTester::operator()(const RearrangementOp& op) const {
  switch (op.kind) {
    case OpKind::SNPR: return snpr(op.e, op.f);
    case OpKind::SNPRPlus: return snpr_plus(op.e, op.f);
    case OpKind::SNPRMinus: return snpr_minus(op.e);
    default: return true;  // NNI kinds are tree-child by construction
  }
}

bool is_tc_respecting_snpr(const PhyloNetwork& net, EdgeId e, EdgeId f) {
  return RespectingTester(net).snpr(e, f);
}

bool is_tc_respecting_snpr_plus(const PhyloNetwork& net, EdgeId e, EdgeId f) {
  return RespectingTester(net).snpr_plus(e, f);
}

bool is_tc_respecting_snpr_minus(const PhyloNetwork& net, EdgeId e) {
  return net.is_reticulation_edge(e);
}

bool is_tc_respecting(const PhyloNetwork& net, const RearrangementOp& op) {
  return RespectingTester(net)(op);
}

KindFilter KindFilter::only(OpKind kind) {
  return {kind == OpKind::SNPR, kind == OpKind::SNPRPlus, kind == OpKind::SNPRMinus};
}

bool KindFilter::includes(OpKind kind) const {
  return (kind == OpKind::SNPR && snpr) || (kind == OpKind::SNPRPlus && snpr_plus) ||
         (kind == OpKind::SNPRMinus && snpr_minus);
}

std::vector<EdgeId> dfs_edge_order(const PhyloNetwork& net) {
  std::vector<EdgeId> order;
  order.reserve(net.edge_count());
  std::vector<bool> seen(net.vertex_count(), false);
  std::vector<VertexId> stack{net.root()};
  seen[net.root()] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    auto out = net.out_edges(v);
    for (EdgeId e : out) order.push_back(e);
    // Push in reverse so the first child is expanded first.
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      VertexId c = net.head(*it);
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  return order;
}

std::vector<RearrangementOp> enumerate_ops(const PhyloNetwork& net, KindFilter kinds,
                                           bool tc_only) {
  if (tc_only && !is_tree_child(net)) {
    throw Error(ErrorCode::NotTreeChild, "tree-child filtering needs a tree-child network");
  }
  const RespectingTester tester(net);
  const auto reach = reachability(net);
  auto descends = [&](EdgeId e, EdgeId f) { return reaches(reach, net.head(e), net.tail(f)); };
  const auto order = dfs_edge_order(net);
  std::vector<RearrangementOp> ops;

  if (kinds.snpr) {
    for (EdgeId e : order) {
      if (net.role(net.tail(e)) != VertexRole::InnerTree) continue;
      for (EdgeId f : order) {
        if (f == e || descends(e, f)) continue;
        if (tc_only && !tester.snpr(e, f)) continue;
        ops.push_back(snpr(e, f));
      }
    }
  }
  if (kinds.snpr_plus) {
    for (EdgeId e : order) {
      if (net.is_reticulation(net.tail(e))) continue;
      for (EdgeId f : order) {
        if (f != e && descends(e, f)) continue;
        if (tc_only && !tester.snpr_plus(e, f)) continue;
        ops.push_back(snpr_plus(e, f));
      }
    }
  }
  if (kinds.snpr_minus) {
    for (EdgeId e : order) {
      if (!net.is_reticulation_edge(e)) continue;
      if (net.is_reticulation(net.tail(e))) continue;
      ops.push_back(snpr_minus(e));
    }
  }
  return ops;
}

bool is_trivial(const PhyloNetwork& net, const RearrangementOp& op) {
  const CanonicalForm before = canonical_form(net);
  const PhyloNetwork after = apply(net, op);
  if (!is_tree_child(after)) return false;
  return canonical_form(after) == before;
}

RearrangementOp nni_as_snpr(const PhyloNetwork& net, const RearrangementOp& op) {
  if (!is_tree_child(net)) ill_formed("NNI is only defined on tree-child networks");
  require_edge(net, op.e, "e");
  switch (op.kind) {
    case OpKind::NNI: {
      require_edge(net, op.f, "f");
      require_edge(net, op.g, "g");
      if (!is_inner_edge(net, op.e)) ill_formed("NNI axis " + edge_text(net, op.e) + " is not an inner edge");
      if (!contains(nni_f_candidates(net, op.e), op.f)) {
        ill_formed(edge_text(net, op.f) + " is not the sibling or a parent edge of the axis");
      }
      if (!contains(nni_g_candidates(net, op.e), op.g)) {
        ill_formed(edge_text(net, op.g) + " is not incident to the head of the axis");
      }
      const RearrangementOp s =
          net.is_reticulation_edge(op.e) ? snpr(op.f, op.g) : snpr(op.g, op.f);
      if (!is_well_formed(net, s)) ill_formed("the corresponding SNPR op is not well formed");
      return s;
    }
    case OpKind::NNIPlus: {
      require_edge(net, op.f, "f");
      if (!contains(nni_f_candidates(net, op.e), op.f)) {
        ill_formed(edge_text(net, op.f) + " is not the sibling or a parent edge of " +
                   edge_text(net, op.e));
      }
      return snpr_plus(op.e, op.f);
    }
    case OpKind::NNIMinus: {
      for (const Triangle& t : find_triangles(net)) {
        if (t.long_side == op.e) return snpr_minus(op.e);
      }
      ill_formed(edge_text(net, op.e) + " is not the long side of a triangle");
    }
    default:
      ill_formed("not an NNI-kind op");
  }
}

PhyloNetwork apply_nni(const PhyloNetwork& net, const RearrangementOp& op) {
  PhyloNetwork out = apply_snpr_kind(net, nni_as_snpr(net, op));
  if (!is_tree_child(out)) ill_formed(std::string(op_kind_name(op.kind)) + " result is not tree-child");
  return out;
}

std::vector<RearrangementOp> enumerate_nni(const PhyloNetwork& net) {
  if (!is_tree_child(net)) {
    throw Error(ErrorCode::NotTreeChild, "NNI is only defined on tree-child networks");
  }
  std::vector<RearrangementOp> candidates;
  std::vector<bool> long_side(net.edge_count(), false);
  for (const Triangle& t : find_triangles(net)) long_side[t.long_side] = true;
  for (EdgeId e : dfs_edge_order(net)) {
    const auto fs = nni_f_candidates(net, e);
    if (is_inner_edge(net, e)) {
      for (EdgeId f : fs) {
        for (EdgeId g : nni_g_candidates(net, e)) candidates.push_back(nni(f, e, g));
      }
    }
    for (EdgeId f : fs) candidates.push_back(nni_plus(e, f));
    if (long_side[e]) candidates.push_back(nni_minus(e));
  }
  std::vector<RearrangementOp> out;
  for (const RearrangementOp& op : candidates) {
    try {
      apply_nni(net, op);
      out.push_back(op);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::IllFormedOp) throw;
    }
  }
  return out;
}

}  // namespace snprnet
