#pragma once

// Canonical forms of tree-child networks, and the brute-force neighbourhood
// oracle built on them.
//
// In a tree-child network no two vertices have the same set of children, so
// ranking vertices bottom-up by (role, label or child ranks) gives every vertex a
// distinct rank that does not depend on vertex ids. The canonical key is the
// eNewick text written with children in rank order and reticulation tags
// numbered in order of first appearance.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "snprnet/formulas.hpp"
#include "snprnet/network.hpp"
#include "snprnet/rearrange.hpp"

namespace snprnet {

struct CanonicalForm {
  std::string key;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

// Throws NotTreeChild.
CanonicalForm canonical_form(const PhyloNetwork& net);

// Rank of every vertex (indexed by VertexId); ranks are 0..V-1, leaves first in
// label order. Throws NotTreeChild.
std::vector<std::uint32_t> canonical_ranks(const PhyloNetwork& net);

// Id-independent vertex names: the taxon for leaves, "v<rank>" otherwise.
std::vector<std::string> canonical_vertex_names(const PhyloNetwork& net);

// Throws TaxonMismatch if the taxon sets differ, NotTreeChild if either input is
// not tree-child.
bool is_isomorphic(const PhyloNetwork& a, const PhyloNetwork& b);

// The three kinds the oracle and the formulas cover.
inline constexpr OpKind kCountedKinds[] = {OpKind::SNPR, OpKind::SNPRPlus, OpKind::SNPRMinus};

struct OracleKindResult {
  std::int64_t ops = 0;      // ops whose result is tree-child
  std::int64_t trivial = 0;  // of those, results isomorphic to the input
  std::vector<std::string> neighbour_keys;  // sorted, distinct
};

struct Neighbourhood {
  std::map<OpKind, OracleKindResult> by_kind;
};

// Applies every well-formed op of the requested kinds, keeps the tree-child
// results, drops the trivial ones and deduplicates by canonical key. The
// tree-child test is made on each result, independently of the respecting
// predicates. `jobs` > 1 spreads op application over threads; the result does
// not depend on it. Throws NotTreeChild.
Neighbourhood enumerate_neighbourhood(const PhyloNetwork& net, KindFilter kinds, int jobs = 1);

struct NeighbourhoodReport {
  FormulaBreakdown formula;
  Neighbourhood oracle;
  bool agrees_snpr = false;
  bool agrees_snpr_plus = false;
  bool agrees_snpr_minus = false;
  bool agrees_total = false;

  bool all_agree() const {
    return agrees_snpr && agrees_snpr_plus && agrees_snpr_minus && agrees_total;
  }
  std::int64_t oracle_total() const;
};

// Formula side from census(net); oracle side from enumerate_neighbourhood.
NeighbourhoodReport verify(const PhyloNetwork& net, int jobs = 1);

struct RedundancyClass {
  std::string key;
  std::vector<RearrangementOp> ops;
};

// Non-trivial tree-child-respecting ops of one kind grouped by result, sorted by
// key; ops within a class keep enumeration order.
std::vector<RedundancyClass> redundancy_classes(const PhyloNetwork& net, OpKind kind);

}  // namespace snprnet
