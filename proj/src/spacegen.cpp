#include "snprnet/spacegen.hpp"

#include <deque>
#include <random>
#include <set>

#include "snprnet/errors.hpp"
#include "snprnet/rearrange.hpp"

namespace snprnet {

namespace {

[[noreturn]] void bad_param(const std::string& why) { throw Error(ErrorCode::BadParam, why); }

// Edge-list builder with dense ids; vertex 0 is the root.
struct Builder {
  std::vector<Edge> edges;
  std::vector<std::string> labels{std::string()};

  VertexId vertex(std::string label = {}) {
    labels.push_back(std::move(label));
    return static_cast<VertexId>(labels.size() - 1);
  }
  void edge(VertexId t, VertexId h) { edges.push_back({t, h}); }
  PhyloNetwork build() {
    const std::size_t count = labels.size();
    return build_network_dense(count, std::move(edges), std::move(labels));
  }
};

std::size_t pick(std::mt19937_64& rng, std::size_t range) {
  return static_cast<std::size_t>(rng() % range);
}

PhyloNetwork random_tree(int n, std::mt19937_64& rng) {
  const auto taxa = default_taxa(n);
  Builder b;
  VertexId top = b.vertex();
  b.edge(0, top);
  b.edge(top, b.vertex(taxa[0]));
  b.edge(top, b.vertex(taxa[1]));
  for (int i = 2; i < n; ++i) {
    const std::size_t k = pick(rng, b.edges.size());
    const Edge old = b.edges[k];
    VertexId w = b.vertex();
    b.edges[k] = {old.tail, w};
    b.edge(w, old.head);
    b.edge(w, b.vertex(taxa[static_cast<std::size_t>(i)]));
  }
  return b.build();
}

}  // namespace

std::vector<std::string> default_taxa(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "t" + std::to_string(i + 1));
  }
  return out;
}

PhyloNetwork gen_chain(int n) {
  if (n < 2) bad_param("chain needs n >= 2, got " + std::to_string(n));
  const auto taxa = default_taxa(n);
  Builder b;
  VertexId above = 0;
  for (int i = 0; i + 1 < n; ++i) {
    VertexId x = b.vertex(), u = b.vertex(), h = b.vertex();
    b.edge(above, x);
    b.edge(x, u);
    b.edge(x, h);
    b.edge(u, h);
    b.edge(u, b.vertex(taxa[static_cast<std::size_t>(i)]));
    above = h;
  }
  b.edge(above, b.vertex(taxa.back()));
  return b.build();
}

PhyloNetwork gen_balanced(int k) {
  if (k < 1 || k > 20) bad_param("balanced tree needs 1 <= k <= 20, got " + std::to_string(k));
  const int n = 1 << k;
  const auto taxa = default_taxa(n);
  Builder b;
  // Level by level from the top; the last level are the leaves.
  std::vector<VertexId> level{b.vertex()};
  b.edge(0, level[0]);
  for (int depth = 1; depth <= k; ++depth) {
    std::vector<VertexId> next;
    for (VertexId v : level) {
      for (int side = 0; side < 2; ++side) {
        VertexId c = depth == k ? b.vertex(taxa[next.size()]) : b.vertex();
        b.edge(v, c);
        next.push_back(c);
      }
    }
    level = std::move(next);
  }
  return b.build();
}

PhyloNetwork gen_random_tree(int n, std::uint64_t seed) {
  if (n < 2) bad_param("random tree needs n >= 2, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  return random_tree(n, rng);
}

PhyloNetwork gen_random_tree_child(int n, int r, std::uint64_t seed) {
  if (n < 2) bad_param("random network needs n >= 2, got " + std::to_string(n));
  if (r < 0 || r > n - 1) {
    bad_param("a tree-child network on " + std::to_string(n) + " leaves has 0 to " +
              std::to_string(n - 1) + " reticulations, got " + std::to_string(r));
  }
  std::mt19937_64 rng(seed);
  // A partial network can run out of admissible SNPR+ ops before reaching r;
  // start over from a fresh tree when that happens.
  for (int attempt = 0; attempt < 1000; ++attempt) {
    PhyloNetwork net = random_tree(n, rng);
    int added = 0;
    while (added < r) {
      const auto ops = enumerate_ops(net, KindFilter::only(OpKind::SNPRPlus), true);
      if (ops.empty()) break;
      net = apply(net, ops[pick(rng, ops.size())]);
      ++added;
    }
    if (added == r) return net;
  }
  bad_param("could not reach " + std::to_string(r) + " reticulations");
}

std::vector<PhyloNetwork> all_rooted_trees(int n) {
  if (n < 2) bad_param("trees need n >= 2, got " + std::to_string(n));
  const auto taxa = default_taxa(n);
  Builder start;
  VertexId top = start.vertex();
  start.edge(0, top);
  start.edge(top, start.vertex(taxa[0]));
  start.edge(top, start.vertex(taxa[1]));
  std::vector<Builder> current{start};
  for (int i = 2; i < n; ++i) {
    std::vector<Builder> next;
    for (const Builder& t : current) {
      for (std::size_t k = 0; k < t.edges.size(); ++k) {
        Builder b = t;
        const Edge old = b.edges[k];
        VertexId w = b.vertex();
        b.edges[k] = {old.tail, w};
        b.edge(w, old.head);
        b.edge(w, b.vertex(taxa[static_cast<std::size_t>(i)]));
        next.push_back(std::move(b));
      }
    }
    current = std::move(next);
  }
  std::vector<PhyloNetwork> out;
  out.reserve(current.size());
  for (Builder& b : current) out.push_back(b.build());
  return out;
}

std::map<CanonicalForm, PhyloNetwork> gen_exhaustive(int n, int r_max, ExhaustiveLimits limits) {
  if (n < 2 || r_max < 0) bad_param("exhaustive generation needs n >= 2 and r_max >= 0");
  if (n > limits.max_n) {
    throw Error(ErrorCode::CapExceeded, "n = " + std::to_string(n) + " exceeds the cap of " +
                                            std::to_string(limits.max_n));
  }
  std::map<CanonicalForm, PhyloNetwork> seen;
  std::deque<const PhyloNetwork*> queue;
  auto visit = [&](PhyloNetwork net) {
    CanonicalForm key = canonical_form(net);
    auto [it, inserted] = seen.try_emplace(std::move(key), std::move(net));
    if (!inserted) return;
    if (seen.size() > limits.max_networks) {
      throw Error(ErrorCode::CapExceeded,
                  "more than " + std::to_string(limits.max_networks) + " networks");
    }
    queue.push_back(&it->second);
  };
  visit(all_rooted_trees(n).front());
  while (!queue.empty()) {
    const PhyloNetwork& net = *queue.front();
    queue.pop_front();
    const bool room = static_cast<int>(net.reticulation_count()) < r_max;
    for (const RearrangementOp& op : enumerate_ops(net, KindFilter{true, room, true}, false)) {
      PhyloNetwork next = apply(net, op);
      if (is_tree_child(next)) visit(std::move(next));
    }
  }
  return seen;
}

std::optional<int> bfs_distance(const PhyloNetwork& a, const PhyloNetwork& b, int cap) {
  if (a.taxa() != b.taxa()) throw Error(ErrorCode::TaxonMismatch, "networks are on different taxon sets");
  const std::string target = canonical_form(b).key;
  std::string start = canonical_form(a).key;
  if (start == target) return 0;
  std::set<std::string> seen{start};
  std::vector<PhyloNetwork> frontier{a};
  for (int depth = 1; depth <= cap && !frontier.empty(); ++depth) {
    std::vector<PhyloNetwork> next;
    for (const PhyloNetwork& net : frontier) {
      for (const RearrangementOp& op : enumerate_ops(net, KindFilter{}, false)) {
        PhyloNetwork out = apply(net, op);
        if (!is_tree_child(out)) continue;
        std::string key = canonical_form(out).key;
        if (key == target) return depth;
        if (seen.insert(std::move(key)).second) next.push_back(std::move(out));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace snprnet
