#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "snprnet/enewick.hpp"
#include "snprnet/network.hpp"

namespace fixtures {

// n=2, r=1: the smallest tree-child network with a reticulation.
inline const char* const kTriangle = "((a,(b)#H1),#H1);";
// The running example network with a single four-cycle.
inline const char* const kFourCycle = "((a,(b,(c)#H1)),#H1);";
inline const char* const kBalanced4 = "((a,b),(c,d));";
inline const char* const kCaterpillar3 = "((a,b),c);";
// Smallest network where the SNPR discard count falls one short.
inline const char* const kOverlappingR3 = "((a)#H1,((b)#H2,(#H1,(c,#H2))));";

inline snprnet::PhyloNetwork net(const char* text) { return snprnet::parse_enewick(text); }

// Same network with vertex ids permuted and the edge list shuffled.
inline snprnet::PhyloNetwork shuffled(const snprnet::PhyloNetwork& src, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<snprnet::VertexId> perm(src.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<snprnet::Edge> edges;
  for (const auto& e : src.edges()) edges.push_back({perm[e.tail], perm[e.head]});
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<std::string> labels(src.vertex_count());
  for (snprnet::VertexId v = 0; v < src.vertex_count(); ++v) labels[perm[v]] = src.label(v);
  return snprnet::build_network_dense(src.vertex_count(), std::move(edges), std::move(labels));
}

}  // namespace fixtures
