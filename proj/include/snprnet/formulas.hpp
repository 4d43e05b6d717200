#pragma once

// Closed-form neighbourhood sizes of tree-child networks, as functions of a
// StructureCensus. All arithmetic is exact 64-bit integer arithmetic.

#include <cstdint>

#include "snprnet/census.hpp"

namespace snprnet {

struct KindCounts {
  std::int64_t ops = 0;
  std::int64_t trivial = 0;
  std::int64_t discards = 0;
  std::int64_t neighbours = 0;
  friend bool operator==(const KindCounts&, const KindCounts&) = default;
};

struct FormulaBreakdown {
  KindCounts snpr;
  KindCounts snpr_plus;
  KindCounts snpr_minus;
  KindCounts total;
  friend bool operator==(const FormulaBreakdown&, const FormulaBreakdown&) = default;
};

// Tree-child-respecting SNPR ops.
std::int64_t count_tc_snpr_ops(const StructureCensus& c);
// Trivial ones among them.
std::int64_t count_trivial_snpr(const StructureCensus& c);
// Non-trivial ops that repeat a neighbour already reached by another op.
std::int64_t count_redundancy_discards(const StructureCensus& c);
// Distinct SNPR neighbours, evaluated as one closed expression.
std::int64_t snpr_neighbourhood_size(const StructureCensus& c);
// 4n^2 - 14n + 14 - sum of delta over all edges. Throws NotATree if r > 0.
std::int64_t tree_snpr_neighbourhood_size(const StructureCensus& c);

struct OpsAndNeighbours {
  std::int64_t ops = 0;
  std::int64_t neighbours = 0;
};
OpsAndNeighbours snpr_plus_counts(const StructureCensus& c);
OpsAndNeighbours snpr_minus_counts(const StructureCensus& c);

// Distinct neighbours over all three kinds, evaluated as one closed expression.
std::int64_t total_neighbourhood_size(const StructureCensus& c);

// Every count above, cross-checked: throws InternalConsistency if a neighbour
// count is negative or the combined expression disagrees with the kind sum.
FormulaBreakdown formula_breakdown(const StructureCensus& c);

struct NeighbourhoodBounds {
  std::int64_t min_lower = 0;
  std::int64_t min_upper = 0;
  std::int64_t max_lower = 0;  // balanced-tree value at the largest power of two <= n
  std::int64_t max_upper = 0;
};
// Bounds on the minimum and maximum total neighbourhood size over tree-child
// networks with n leaves. Throws BadParam if n < 2.
NeighbourhoodBounds bounds(std::int64_t n);

}  // namespace snprnet
