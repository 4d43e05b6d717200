#pragma once

// JSON forms of the library's result types.

#include <json.hpp>

#include "snprnet/canon.hpp"
#include "snprnet/census.hpp"
#include "snprnet/errors.hpp"
#include "snprnet/formulas.hpp"
#include "snprnet/rearrange.hpp"

namespace snprnet {

// Flat object: n, r, r1, r2, r3, triangles, tree_branching_triangles, diamonds,
// trapezoids, sum_delta_Tstar, sum_deltaT_R, sum_deltaT_PS, sum_deltaT_B3.
nlohmann::ordered_json census_to_json(const StructureCensus& c);

// {snpr, snpr_plus, snpr_minus, total} x {ops, trivial, discards, neighbours}.
nlohmann::ordered_json breakdown_to_json(const FormulaBreakdown& b);

// {kind, e, f?, g?}; edges named "tail->head" with canonical vertex names.
nlohmann::ordered_json op_to_json(const PhyloNetwork& net, const RearrangementOp& op,
                                  const std::vector<std::string>& vertex_names);

// Formula and oracle counts per kind with agreement flags; neighbour keys only
// when requested.
nlohmann::ordered_json report_to_json(const NeighbourhoodReport& report, bool with_keys);

// {"error": {"code": "<module>.<Name>", "message": ..., "line"?, "column"?}}
nlohmann::ordered_json error_to_json(const Error& err);

}  // namespace snprnet
