#include "snprnet/serialize.hpp"

namespace snprnet {

using nlohmann::ordered_json;

ordered_json census_to_json(const StructureCensus& c) {
  ordered_json j;
  j["n"] = c.n;
  j["r"] = c.r;
  j["r1"] = c.r1;
  j["r2"] = c.r2;
  j["r3"] = c.r3;
  j["triangles"] = c.triangles;
  j["tree_branching_triangles"] = c.tree_branching_triangles;
  j["diamonds"] = c.diamonds;
  j["trapezoids"] = c.trapezoids;
  j["sum_delta_Tstar"] = c.sum_delta_tstar;
  j["sum_deltaT_R"] = c.sum_deltaT_r;
  j["sum_deltaT_PS"] = c.sum_deltaT_ps;
  j["sum_deltaT_B3"] = c.sum_deltaT_b3;
  return j;
}

namespace {

ordered_json kind_to_json(const KindCounts& k) {
  ordered_json j;
  j["ops"] = k.ops;
  j["trivial"] = k.trivial;
  j["discards"] = k.discards;
  j["neighbours"] = k.neighbours;
  return j;
}

std::string edge_name(const PhyloNetwork& net, EdgeId e, const std::vector<std::string>& names) {
  return names[net.tail(e)] + "->" + names[net.head(e)];
}

}  // namespace

ordered_json breakdown_to_json(const FormulaBreakdown& b) {
  ordered_json j;
  j["snpr"] = kind_to_json(b.snpr);
  j["snpr_plus"] = kind_to_json(b.snpr_plus);
  j["snpr_minus"] = kind_to_json(b.snpr_minus);
  j["total"] = kind_to_json(b.total);
  return j;
}

ordered_json op_to_json(const PhyloNetwork& net, const RearrangementOp& op,
                        const std::vector<std::string>& vertex_names) {
  ordered_json j;
  j["kind"] = std::string(op_kind_name(op.kind));
  j["e"] = edge_name(net, op.e, vertex_names);
  if (op.f != kNoEdge) j["f"] = edge_name(net, op.f, vertex_names);
  if (op.g != kNoEdge) j["g"] = edge_name(net, op.g, vertex_names);
  return j;
}

ordered_json report_to_json(const NeighbourhoodReport& report, bool with_keys) {
  ordered_json j;
  j["formula"] = breakdown_to_json(report.formula);
  ordered_json oracle;
  const std::pair<OpKind, const char*> kinds[] = {
      {OpKind::SNPR, "snpr"}, {OpKind::SNPRPlus, "snpr_plus"}, {OpKind::SNPRMinus, "snpr_minus"}};
  for (const auto& [kind, name] : kinds) {
    const OracleKindResult& res = report.oracle.by_kind.at(kind);
    ordered_json k;
    k["ops"] = res.ops;
    k["trivial"] = res.trivial;
    k["neighbours"] = res.neighbour_keys.size();
    if (with_keys) k["neighbour_keys"] = res.neighbour_keys;
    oracle[name] = std::move(k);
  }
  oracle["total"] = {{"neighbours", report.oracle_total()}};
  j["oracle"] = std::move(oracle);
  j["agrees"] = {{"snpr", report.agrees_snpr},
                 {"snpr_plus", report.agrees_snpr_plus},
                 {"snpr_minus", report.agrees_snpr_minus},
                 {"total", report.agrees_total}};
  return j;
}

ordered_json error_to_json(const Error& err) {
  ordered_json e;
  e["code"] = qualified_error_name(err.code());
  e["message"] = err.message();
  if (const auto* parse = dynamic_cast<const ParseError*>(&err)) {
    e["line"] = parse->line();
    e["column"] = parse->column();
  }
  ordered_json j;
  j["error"] = std::move(e);
  return j;
}

}  // namespace snprnet
