#include "snprnet/census.hpp"

#include "snprnet/errors.hpp"

namespace snprnet {

bool is_pure_tree_edge(const PhyloNetwork& net, EdgeId e) {
  return net.is_tree_vertex(net.tail(e)) && net.is_tree_vertex(net.head(e));
}

std::vector<Triangle> find_triangles(const PhyloNetwork& net) {
  std::vector<Triangle> out;
  for (VertexId w : net.reticulations()) {
    auto in = net.in_edges(w);
    for (int side = 0; side < 2; ++side) {
      EdgeId long_side = in[side], bottom = in[1 - side];
      VertexId x = net.tail(long_side), u = net.tail(bottom);
      if (x == u) continue;
      for (EdgeId top : net.out_edges(x)) {
        if (net.head(top) == u) {
          out.push_back({x, u, w, top, long_side, bottom});
          break;
        }
      }
    }
  }
  return out;
}

std::vector<Diamond> find_diamonds(const PhyloNetwork& net) {
  std::vector<Diamond> out;
  for (VertexId z : net.reticulations()) {
    auto in = net.in_edges(z);
    VertexId v = net.tail(in[0]), w = net.tail(in[1]);
    if (v == w) continue;
    for (EdgeId uv : net.in_edges(v)) {
      for (EdgeId uw : net.in_edges(w)) {
        if (net.tail(uv) == net.tail(uw)) {
          out.push_back({net.tail(uv), v, w, z, {uv, uw, in[0], in[1]}});
        }
      }
    }
  }
  return out;
}

std::vector<Trapezoid> find_trapezoids(const PhyloNetwork& net) {
  std::vector<Trapezoid> out;
  for (VertexId z : net.reticulations()) {
    auto in = net.in_edges(z);
    for (int side = 0; side < 2; ++side) {
      EdgeId wz = in[side], uz = in[1 - side];
      VertexId w = net.tail(wz), u = net.tail(uz);
      if (w == u) continue;
      for (EdgeId vw : net.in_edges(w)) {
        VertexId v = net.tail(vw);
        for (EdgeId uv : net.in_edges(v)) {
          if (net.tail(uv) == u) out.push_back({u, v, w, z, {uv, vw, wz, uz}});
        }
      }
    }
  }
  return out;
}

std::vector<Trapezoid> find_trapi_trapezoids(const PhyloNetwork& net) {
  std::vector<Trapezoid> out;
  for (const Trapezoid& t : find_trapezoids(net)) {
    auto at_v = net.sibling_edge(t.edges[1]);
    auto at_w = net.sibling_edge(t.edges[2]);
    if (at_v && at_w && is_pure_tree_edge(net, *at_v) && is_pure_tree_edge(net, *at_w)) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<CriticalStructure> find_critical_structures(const PhyloNetwork& net) {
  std::vector<CriticalStructure> out;
  for (VertexId u = 0; u < net.vertex_count(); ++u) {
    if (net.role(u) != VertexRole::InnerTree) continue;
    auto children = net.out_edges(u);
    EdgeId to_w = kNoEdge, critical = kNoEdge;
    for (EdgeId e : children) {
      if (net.is_reticulation_edge(e)) {
        to_w = e;
      } else {
        critical = e;
      }
    }
    if (to_w == kNoEdge || critical == kNoEdge) continue;
    EdgeId x_to_u = net.in_edges(u)[0];
    VertexId x = net.tail(x_to_u);
    VertexId w = net.head(to_w);
    if (net.is_reticulation(x)) {
      out.push_back({CriticalKind::R2, x, u, w, kNoVertex, critical, x_to_u, kNoEdge});
      continue;
    }
    auto x_to_y = net.sibling_edge(x_to_u);
    if (!x_to_y || !net.is_reticulation_edge(*x_to_y)) continue;
    VertexId y = net.head(*x_to_y);
    out.push_back({y == w ? CriticalKind::Triangle : CriticalKind::R3, x, u, w, y, critical, x_to_u,
                   *x_to_y});
  }
  return out;
}

StructureCensus census(const PhyloNetwork& net) {
  if (!is_tree_child(net)) {
    throw Error(ErrorCode::NotTreeChild, "census requires a tree-child network");
  }
  StructureCensus c;
  c.n = static_cast<std::int64_t>(net.leaf_count());
  c.r = static_cast<std::int64_t>(net.reticulation_count());
  c.m = static_cast<std::int64_t>(net.edge_count());

  for (VertexId h : net.reticulations()) {
    if (net.is_leaf(net.head(net.out_edges(h)[0]))) ++c.r1;
  }

  std::vector<bool> critical(net.edge_count(), false);
  for (const CriticalStructure& s : find_critical_structures(net)) {
    // A triangle is also an r3 structure.
    if (s.kind == CriticalKind::R2) {
      ++c.r2;
    } else {
      ++c.r3;
    }
    critical[s.critical] = true;
    c.edge_sets.critical.push_back(s.critical);
  }

  auto triangles = find_triangles(net);
  c.triangles = static_cast<std::int64_t>(triangles.size());
  for (const Triangle& t : triangles) {
    c.edge_sets.triangle_bottom.push_back(t.bottom);
    auto uv = net.sibling_edge(t.bottom);
    if (!uv || !is_pure_tree_edge(net, *uv)) continue;
    VertexId v = net.head(*uv);
    if (net.role(v) != VertexRole::InnerTree) continue;
    bool all_pure = true;
    for (EdgeId e : net.out_edges(v)) all_pure = all_pure && is_pure_tree_edge(net, e);
    if (all_pure) ++c.tree_branching_triangles;
  }
  c.diamonds = static_cast<std::int64_t>(find_diamonds(net).size());
  c.trapezoids = static_cast<std::int64_t>(find_trapi_trapezoids(net).size());

  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (net.is_reticulation_edge(e)) {
      c.edge_sets.reticulation.push_back(e);
      continue;
    }
    if (!is_pure_tree_edge(net, e)) continue;
    if (!critical[e]) c.edge_sets.tree_star.push_back(e);
    auto sib = net.sibling_edge(e);
    if (sib && is_pure_tree_edge(net, *sib)) c.edge_sets.pure_sibling.push_back(e);
  }
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    auto out = net.out_edges(v);
    if (out.size() == 2 && net.head(out[0]) == net.head(out[1])) ++c.parallel_edge_pairs;
  }

  const DescendantCounts delta = descendant_counts(net);
  auto sum = [](const std::vector<EdgeId>& set, const std::vector<std::uint64_t>& values) {
    std::int64_t total = 0;
    for (EdgeId e : set) total += static_cast<std::int64_t>(values[e]);
    return total;
  };
  c.sum_delta_tstar = sum(c.edge_sets.tree_star, delta.all);
  c.sum_deltaT_r = sum(c.edge_sets.reticulation, delta.tree);
  c.sum_deltaT_ps = sum(c.edge_sets.pure_sibling, delta.tree);
  c.sum_deltaT_b3 = sum(c.edge_sets.triangle_bottom, delta.tree);
  return c;
}

std::chrono::nanoseconds census_time_guard(const PhyloNetwork& net, int runs) {
  if (runs < 1) runs = 1;
  const auto start = std::chrono::steady_clock::now();
  std::int64_t sink = 0;
  for (int i = 0; i < runs; ++i) sink += census(net).sum_delta_tstar;
  const auto elapsed = std::chrono::steady_clock::now() - start;
  // Keep the loop observable.
  if (sink == -1) return std::chrono::nanoseconds::zero();
  return std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed) / runs;
}

}  // namespace snprnet
