#pragma once

// Network families and small network spaces.
//
// Generated taxa are named by default_taxa(n): "a".."z" for n <= 26, otherwise
// "t1".."tn".

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "snprnet/canon.hpp"
#include "snprnet/network.hpp"

namespace snprnet {

std::vector<std::string> default_taxa(int n);

// A chain of n - 1 triangles, each hanging below the previous one; the last
// reticulation has the leaf n as its child. n >= 2.
PhyloNetwork gen_chain(int n);

// The balanced tree on 2^k leaves, 1 <= k <= 20.
PhyloNetwork gen_balanced(int k);

// Random rooted binary tree by leaf insertion: starting from a cherry, each
// further leaf subdivides an edge chosen uniformly from the current edges.
// Random choices are std::mt19937_64 outputs reduced modulo the range size, so
// results are the same on every platform.
PhyloNetwork gen_random_tree(int n, std::uint64_t seed);

// A random tree followed by r random tree-child-respecting SNPR+ ops. Requires
// 2 <= n and 0 <= r <= n - 1.
PhyloNetwork gen_random_tree_child(int n, int r, std::uint64_t seed);

// Every rooted binary tree on default_taxa(n), (2n - 3)!! of them.
std::vector<PhyloNetwork> all_rooted_trees(int n);

struct ExhaustiveLimits {
  int max_n = 5;
  std::size_t max_networks = 2'000'000;
};

// All tree-child networks on default_taxa(n) with at most r_max reticulations:
// the closure of one tree under SNPR, SNPR+ and SNPR- ops with tree-child
// results, keyed by canonical form. Throws CapExceeded beyond the limits,
// BadParam for n < 2 or r_max < 0.
std::map<CanonicalForm, PhyloNetwork> gen_exhaustive(int n, int r_max,
                                                     ExhaustiveLimits limits = {});

// Tree-child SNPR distance by breadth-first search, or nullopt if it exceeds
// cap. Throws TaxonMismatch, NotTreeChild.
std::optional<int> bfs_distance(const PhyloNetwork& a, const PhyloNetwork& b, int cap);

}  // namespace snprnet
