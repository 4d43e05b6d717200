#include "snprnet/canon.hpp"

#include <algorithm>
#include <tuple>

#include "newick_writer.hpp"
#include "snprnet/errors.hpp"

namespace snprnet {

namespace {

void require_tree_child(const PhyloNetwork& net, const char* what) {
  if (!is_tree_child(net)) {
    throw Error(ErrorCode::NotTreeChild, std::string(what) + " needs a tree-child network");
  }
}

struct VertexKey {
  std::uint8_t kind;  // leaf 0, reticulation 1, inner tree 2, root 3
  const std::string* label;
  std::uint32_t first;
  std::uint32_t second;

  auto tie() const { return std::tie(kind, *label, first, second); }
};

std::uint8_t kind_order(VertexRole role) {
  switch (role) {
    case VertexRole::Leaf: return 0;
    case VertexRole::Reticulation: return 1;
    case VertexRole::InnerTree: return 2;
    case VertexRole::Root: return 3;
  }
  return 4;
}

}  // namespace

std::vector<std::uint32_t> canonical_ranks(const PhyloNetwork& net) {
  require_tree_child(net, "canonical ranking");
  const std::size_t count = net.vertex_count();

  std::vector<std::uint32_t> height(count, 0);
  std::uint32_t max_height = 0;
  auto order = net.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    VertexId v = *it;
    for (EdgeId e : net.out_edges(v)) height[v] = std::max(height[v], height[net.head(e)] + 1);
    max_height = std::max(max_height, height[v]);
  }
  std::vector<std::vector<VertexId>> levels(max_height + 1);
  for (VertexId v = 0; v < count; ++v) levels[height[v]].push_back(v);

  // Children always sit on strictly lower levels, so their ranks are final by
  // the time a level is keyed.
  static const std::string kNoLabel;
  std::vector<std::uint32_t> rank(count, 0);
  std::vector<VertexKey> keys(count);
  std::uint32_t next = 0;
  for (auto& level : levels) {
    for (VertexId v : level) {
      VertexKey k{kind_order(net.role(v)), &net.label(v), 0, 0};
      if (!net.is_leaf(v)) k.label = &kNoLabel;
      auto out = net.out_edges(v);
      if (out.size() >= 1) k.first = rank[net.head(out[0])];
      if (out.size() == 2) {
        k.second = rank[net.head(out[1])];
        if (k.second < k.first) std::swap(k.first, k.second);
      }
      keys[v] = k;
    }
    std::sort(level.begin(), level.end(),
              [&](VertexId a, VertexId b) { return keys[a].tie() < keys[b].tie(); });
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (i > 0 && keys[level[i - 1]].tie() == keys[level[i]].tie()) {
        throw Error(ErrorCode::InternalConsistency,
                    "two vertices share a canonical key in a tree-child network");
      }
      rank[level[i]] = next++;
    }
  }
  return rank;
}

CanonicalForm canonical_form(const PhyloNetwork& net) {
  const auto rank = canonical_ranks(net);
  return {detail::write_newick(net, &rank)};
}

std::vector<std::string> canonical_vertex_names(const PhyloNetwork& net) {
  const auto rank = canonical_ranks(net);
  std::vector<std::string> names(net.vertex_count());
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    names[v] = net.is_leaf(v) ? net.label(v) : "v" + std::to_string(rank[v]);
  }
  return names;
}

bool is_isomorphic(const PhyloNetwork& a, const PhyloNetwork& b) {
  if (a.taxa() != b.taxa()) {
    throw Error(ErrorCode::TaxonMismatch, "networks are on different taxon sets");
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace snprnet
