#include "snprnet/formulas.hpp"

#include <bit>
#include <string>

#include "snprnet/errors.hpp"

namespace snprnet {

std::int64_t count_tc_snpr_ops(const StructureCensus& c) {
  const std::int64_t n = c.n, r = c.r, r23 = c.r2 + c.r3;
  return 4 * n * n + 10 * n * r - 2 * n * r23 - 6 * n + 2 * r * r - 3 * r * r23 - 5 * r +
         4 * c.r2 + 5 * c.r3 + 2 - c.sum_delta_tstar - c.sum_deltaT_r;
}

std::int64_t count_trivial_snpr(const StructureCensus& c) {
  return 4 * c.n + 4 * c.r + 3 * c.triangles - 4;
}

std::int64_t count_redundancy_discards(const StructureCensus& c) {
  const std::int64_t b3 = c.triangles;
  return 2 * c.n * (2 + b3) + c.r * (2 + b3) + 4 * c.r1 - 2 * c.r3 - 8 * b3 +
         c.tree_branching_triangles + 3 * c.diamonds + c.trapezoids - 8 - c.sum_deltaT_b3;
}

std::int64_t snpr_neighbourhood_size(const StructureCensus& c) {
  const std::int64_t n = c.n, r = c.r, b3 = c.triangles;
  return 4 * n * n + 10 * n * r - 2 * n * (c.r2 + c.r3 + b3) - 14 * n + 2 * r * r -
         r * (3 * c.r2 + 3 * c.r3 + b3) - 11 * r - 4 * c.r1 + 4 * c.r2 + 7 * c.r3 + 5 * b3 -
         c.tree_branching_triangles - 3 * c.diamonds - c.trapezoids + 14 - c.sum_delta_tstar -
         c.sum_deltaT_r + c.sum_deltaT_b3;
}

std::int64_t tree_snpr_neighbourhood_size(const StructureCensus& c) {
  if (c.r != 0) {
    throw Error(ErrorCode::NotATree,
                "network has " + std::to_string(c.r) + " reticulations, expected a tree");
  }
  // On a tree every edge is a pure non-critical tree edge.
  return 4 * c.n * c.n - 14 * c.n + 14 - c.sum_delta_tstar;
}

OpsAndNeighbours snpr_plus_counts(const StructureCensus& c) {
  const std::int64_t n = c.n, r = c.r;
  return {4 * n * n - 2 * n * r - 8 * n - 2 * r * r + 2 * r + 4 - c.sum_deltaT_ps,
          4 * n * n - 2 * n * r - 10 * n - 2 * r * r + 4 * r + 6 - c.sum_deltaT_ps};
}

OpsAndNeighbours snpr_minus_counts(const StructureCensus& c) {
  return {2 * c.r, 2 * c.r - c.triangles};
}

std::int64_t total_neighbourhood_size(const StructureCensus& c) {
  const std::int64_t n = c.n, r = c.r, b3 = c.triangles;
  return 8 * n * n + 8 * n * r - 2 * n * (c.r2 + c.r3 + b3) - 24 * n -
         r * (3 * c.r2 + 3 * c.r3 + b3) - 5 * r - 4 * c.r1 + 4 * c.r2 + 7 * c.r3 + 4 * b3 -
         c.tree_branching_triangles - 3 * c.diamonds - c.trapezoids + 20 - c.sum_delta_tstar -
         c.sum_deltaT_r - c.sum_deltaT_ps + c.sum_deltaT_b3;
}

FormulaBreakdown formula_breakdown(const StructureCensus& c) {
  FormulaBreakdown b;
  b.snpr.ops = count_tc_snpr_ops(c);
  b.snpr.trivial = count_trivial_snpr(c);
  b.snpr.discards = count_redundancy_discards(c);
  b.snpr.neighbours = snpr_neighbourhood_size(c);

  const OpsAndNeighbours plus = snpr_plus_counts(c);
  b.snpr_plus = {plus.ops, 0, plus.ops - plus.neighbours, plus.neighbours};
  const OpsAndNeighbours minus = snpr_minus_counts(c);
  b.snpr_minus = {minus.ops, 0, minus.ops - minus.neighbours, minus.neighbours};

  b.total.ops = b.snpr.ops + b.snpr_plus.ops + b.snpr_minus.ops;
  b.total.trivial = b.snpr.trivial;
  b.total.discards = b.snpr.discards + b.snpr_plus.discards + b.snpr_minus.discards;
  b.total.neighbours = total_neighbourhood_size(c);

  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::InternalConsistency, what);
  };
  if (b.snpr.neighbours != b.snpr.ops - b.snpr.trivial - b.snpr.discards) {
    fail("SNPR neighbour count does not match ops - trivial - discards");
  }
  if (b.total.neighbours != b.snpr.neighbours + b.snpr_plus.neighbours + b.snpr_minus.neighbours) {
    fail("combined neighbour count does not match the per-kind sum");
  }
  for (const KindCounts* k : {&b.snpr, &b.snpr_plus, &b.snpr_minus}) {
    if (k->neighbours < 0) fail("negative neighbour count; the census is inconsistent");
  }
  return b;
}

NeighbourhoodBounds bounds(std::int64_t n) {
  if (n < 2) throw Error(ErrorCode::BadParam, "bounds need n >= 2, got " + std::to_string(n));
  NeighbourhoodBounds out;
  out.min_lower = n - 1;
  // (3/2)n^2 - (7/2)n + 2 is an integer: n(3n - 7) is even.
  out.min_upper = (3 * n * n - 7 * n + 4) / 2;
  const std::int64_t p = static_cast<std::int64_t>(std::bit_floor(static_cast<std::uint64_t>(n)));
  const std::int64_t log_p = std::bit_width(static_cast<std::uint64_t>(p)) - 1;
  out.max_lower = 8 * p * p - 4 * p * log_p - 18 * p + 14;
  out.max_upper = 16 * n * n - 38 * n + 26;
  return out;
}

}  // namespace snprnet
