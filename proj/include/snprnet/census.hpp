#pragma once

// Structure census of tree-child networks: the local patterns and edge-set sums
// that the neighbourhood-size formulas are written in.
//
// Every structure contains a reticulation, so all detectors scan locally from the
// reticulations (or from the tree vertex directly above one).

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "snprnet/network.hpp"

namespace snprnet {

// Edges (x,u), (x,w), (u,w) with w a reticulation.
struct Triangle {
  VertexId x, u, w;
  EdgeId top;        // (x, u)
  EdgeId long_side;  // (x, w)
  EdgeId bottom;     // (u, w)
};

// Edges (u,v), (u,w), (v,z), (w,z); z is the reticulation.
struct Diamond {
  VertexId u, v, w, z;
  std::array<EdgeId, 4> edges;
};

// Edges (u,v), (v,w), (w,z), (u,z); z is the reticulation.
struct Trapezoid {
  VertexId u, v, w, z;
  std::array<EdgeId, 4> edges;
};

enum class CriticalKind : std::uint8_t { R2, R3, Triangle };

// An r2 structure (reticulation x -> u -> reticulation w), or an r3 structure
// (x -> y, x -> u, u -> w with y and w reticulations; a triangle when y == w).
// The critical edge is (u, v) with v the tree child of u.
struct CriticalStructure {
  CriticalKind kind;
  VertexId x, u, w;
  VertexId y = kNoVertex;          // r3 and triangle only
  EdgeId critical;                 // (u, v)
  EdgeId x_to_u;                   // (x, u)
  EdgeId x_to_y = kNoEdge;         // r3 and triangle only
};

std::vector<Triangle> find_triangles(const PhyloNetwork& net);
std::vector<Diamond> find_diamonds(const PhyloNetwork& net);
std::vector<Trapezoid> find_trapezoids(const PhyloNetwork& net);
// Trapezoids whose outgoing edges at v and w are pure tree edges.
std::vector<Trapezoid> find_trapi_trapezoids(const PhyloNetwork& net);
// r2, r3 and triangle structures, one per critical edge. Assumes tree-child.
std::vector<CriticalStructure> find_critical_structures(const PhyloNetwork& net);

bool is_pure_tree_edge(const PhyloNetwork& net, EdgeId e);

struct CensusEdgeSets {
  std::vector<EdgeId> tree_star;        // pure non-critical tree edges
  std::vector<EdgeId> reticulation;     // reticulation edges
  std::vector<EdgeId> pure_sibling;     // pure tree edges with a pure tree sibling edge
  std::vector<EdgeId> triangle_bottom;  // bottom sides of triangles
  std::vector<EdgeId> critical;
};

struct StructureCensus {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t m = 0;
  std::int64_t r1 = 0;
  std::int64_t r2 = 0;
  std::int64_t r3 = 0;
  std::int64_t triangles = 0;
  std::int64_t tree_branching_triangles = 0;
  std::int64_t diamonds = 0;
  std::int64_t trapezoids = 0;  // with two pure outgoing tree edges
  std::int64_t sum_delta_tstar = 0;
  std::int64_t sum_deltaT_r = 0;
  std::int64_t sum_deltaT_ps = 0;
  std::int64_t sum_deltaT_b3 = 0;
  // Diagnostic only; always zero for tree-child networks.
  std::int64_t parallel_edge_pairs = 0;
  CensusEdgeSets edge_sets;
};

// Throws NotTreeChild.
StructureCensus census(const PhyloNetwork& net);

// Mean wall time of census(net) over `runs` repetitions.
std::chrono::nanoseconds census_time_guard(const PhyloNetwork& net, int runs = 1);

}  // namespace snprnet
