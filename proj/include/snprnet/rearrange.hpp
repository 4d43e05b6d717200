#pragma once

// SNPR, SNPR+, SNPR- and NNI operations.
//
// Ops refer to edges of one specific source network by EdgeId; they are
// meaningless against any other network. NNI ops are defined only for tree-child
// inputs and are evaluated through the SNPR op they correspond to.

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "snprnet/network.hpp"

namespace snprnet {

enum class OpKind : std::uint8_t { SNPR, SNPRPlus, SNPRMinus, NNI, NNIPlus, NNIMinus };

// "SNPR", "SNPR+", "SNPR-", "NNI", "NNI+", "NNI-"
std::string_view op_kind_name(OpKind kind);
std::optional<OpKind> parse_op_kind(std::string_view name);

// Field use per kind:
//   SNPR, SNPR+, NNI+   (e, f)
//   SNPR-, NNI-         (e)
//   NNI                 (f, e, g) with e the axis
struct RearrangementOp {
  OpKind kind = OpKind::SNPR;
  EdgeId e = kNoEdge;
  EdgeId f = kNoEdge;
  EdgeId g = kNoEdge;

  friend auto operator<=>(const RearrangementOp&, const RearrangementOp&) = default;
};

inline RearrangementOp snpr(EdgeId e, EdgeId f) { return {OpKind::SNPR, e, f, kNoEdge}; }
inline RearrangementOp snpr_plus(EdgeId e, EdgeId f) { return {OpKind::SNPRPlus, e, f, kNoEdge}; }
inline RearrangementOp snpr_minus(EdgeId e) { return {OpKind::SNPRMinus, e, kNoEdge, kNoEdge}; }
inline RearrangementOp nni(EdgeId f, EdgeId e, EdgeId g) { return {OpKind::NNI, e, f, g}; }
inline RearrangementOp nni_plus(EdgeId e, EdgeId f) { return {OpKind::NNIPlus, e, f, kNoEdge}; }
inline RearrangementOp nni_minus(EdgeId e) { return {OpKind::NNIMinus, e, kNoEdge, kNoEdge}; }

// Throws IllFormedOp when the op does not fit the network, WouldViolateDegree
// when an SNPR- would leave a reticulation without children. The result need
// not be tree-child (except for NNI kinds, see apply_nni).
PhyloNetwork apply(const PhyloNetwork& net, const RearrangementOp& op);

// Syntactic validity: the conditions under which apply succeeds for SNPR kinds.
bool is_well_formed(const PhyloNetwork& net, const RearrangementOp& op);

// Tree-child-respecting predicates: true iff applying the op to the tree-child
// network net gives a tree-child network. Decided from local structure only.
bool is_tc_respecting_snpr(const PhyloNetwork& net, EdgeId e, EdgeId f);
bool is_tc_respecting_snpr_plus(const PhyloNetwork& net, EdgeId e, EdgeId f);
bool is_tc_respecting_snpr_minus(const PhyloNetwork& net, EdgeId e);
bool is_tc_respecting(const PhyloNetwork& net, const RearrangementOp& op);

// Caches the per-network data (critical structures, descendant sets) that the
// predicates need, for callers testing many ops on one network.
class RespectingTester {
 public:
  explicit RespectingTester(const PhyloNetwork& net);
  bool snpr(EdgeId e, EdgeId f) const;
  bool snpr_plus(EdgeId e, EdgeId f) const;
  bool snpr_minus(EdgeId e) const;
  bool operator()(const RearrangementOp& op) const;

 private:
  bool descends(EdgeId e, EdgeId f) const;

  const PhyloNetwork* net_;
  // reach_[v] is the bitset of vertices reachable from v, v included.
  std::vector<std::vector<std::uint64_t>> reach_;
  std::vector<bool> pure_sibling_;
  // For critical edges, the (x, y) edge of their r3 or triangle structure, or
  // kNoEdge for r2 structures.
  std::vector<bool> is_critical_;
  std::vector<EdgeId> critical_partner_;
};

struct KindFilter {
  bool snpr = true;
  bool snpr_plus = true;
  bool snpr_minus = true;

  static KindFilter only(OpKind kind);
  bool includes(OpKind kind) const;
};

// Edges in depth-first order from the root, children in slot order. This is the
// fixed numbering that enumeration order follows.
std::vector<EdgeId> dfs_edge_order(const PhyloNetwork& net);

// All well-formed SNPR-kind ops, ordered by kind, then e, then f in
// dfs_edge_order. With tc_only, filtered by the respecting predicates; throws
// NotTreeChild if net is not tree-child.
std::vector<RearrangementOp> enumerate_ops(const PhyloNetwork& net, KindFilter kinds,
                                           bool tc_only);

// apply(net, op) is isomorphic to net. Requires a tree-child net.
bool is_trivial(const PhyloNetwork& net, const RearrangementOp& op);

// The SNPR-kind op with the same effect as an NNI-kind op. Checks the NNI
// preconditions and throws IllFormedOp if they fail.
RearrangementOp nni_as_snpr(const PhyloNetwork& net, const RearrangementOp& op);

// Applies an NNI-kind op; the input must be tree-child and so must the result,
// otherwise IllFormedOp.
PhyloNetwork apply_nni(const PhyloNetwork& net, const RearrangementOp& op);

// Every NNI, NNI+ and NNI- op satisfying the preconditions whose result is
// tree-child, in dfs_edge_order.
std::vector<RearrangementOp> enumerate_nni(const PhyloNetwork& net);

}  // namespace snprnet
