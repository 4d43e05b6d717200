#include <doctest.h>

#include "snprnet/canon.hpp"
#include "snprnet/draft.hpp"
#include "snprnet/errors.hpp"
#include "snprnet/network.hpp"
#include "snprnet/spacegen.hpp"
#include "support/fixtures.hpp"

using namespace snprnet;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InternalConsistency;
}

// Vertex ids: 0 root, 1 top, 2 left cherry, 3 right cherry, 4..7 leaves a..d.
PhyloNetwork balanced4_from_edges() {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> edges{
      {0, 1}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}};
  return build_network(edges, {{4, "a"}, {5, "b"}, {6, "c"}, {7, "d"}});
}

EdgeId edge_between(const PhyloNetwork& net, VertexId t, VertexId h) {
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (net.tail(e) == t && net.head(e) == h) return e;
  }
  FAIL("no such edge");
  return kNoEdge;
}

}  // namespace

TEST_CASE("build_network accepts the balanced 4-leaf tree") {
  const PhyloNetwork net = balanced4_from_edges();
  CHECK(net.leaf_count() == 4);
  CHECK(net.reticulation_count() == 0);
  CHECK(net.edge_count() == 7);
  CHECK(net.role(net.root()) == VertexRole::Root);
  CHECK(net.taxa() == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("triangle network has 2n + 3r - 1 edges") {
  const PhyloNetwork net = fixtures::net(fixtures::kTriangle);
  CHECK(net.leaf_count() == 2);
  CHECK(net.reticulation_count() == 1);
  CHECK(net.edge_count() == 6);
}

TEST_CASE("validation errors") {
  using E = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
  // Vertex 4 has two reticulation parents and two children.
  CHECK(code_of([] {
          build_network(E{{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 6}, {4, 7}, {4, 8}},
                        {{5, "a"}, {6, "b"}, {7, "c"}, {8, "d"}});
        }) == ErrorCode::DegreeViolation);
  CHECK(code_of([] { build_network(E{{0, 1}, {1, 2}, {1, 3}}, {{2, "a"}, {3, "a"}}); }) ==
        ErrorCode::DuplicateLeafLabel);
  CHECK(code_of([] { build_network(E{{0, 1}, {1, 2}, {1, 3}}, {{2, "a"}}); }) ==
        ErrorCode::MissingLeafLabel);
  CHECK(code_of([] { build_network(E{{1, 2}, {1, 3}}, {{2, "a"}, {3, "b"}}); }) ==
        ErrorCode::NoPendantRoot);
  CHECK(code_of([] { build_network(E{{0, 1}}, {{1, "a"}}); }) == ErrorCode::TooFewLeaves);
  // Tree vertices 4, 5, 6 on a directed cycle, detached from the root.
  CHECK(code_of([] {
          build_network(E{{0, 1}, {1, 2}, {1, 3}, {4, 5}, {5, 6}, {6, 4}, {5, 7}, {6, 8}, {4, 9}},
                        {{2, "a"}, {3, "b"}, {7, "c"}, {8, "d"}, {9, "e"}});
        }) == ErrorCode::CyclicGraph);
}

TEST_CASE("is_tree_child") {
  CHECK(is_tree_child(fixtures::net(fixtures::kBalanced4)));
  CHECK(is_tree_child(fixtures::net(fixtures::kTriangle)));
  CHECK(is_tree_child(fixtures::net(fixtures::kFourCycle)));
  // The top vertex has two reticulation children.
  const PhyloNetwork bad = fixtures::net("(((a)#H1,(b)#H2),(#H1,#H2));");
  CHECK_FALSE(is_tree_child(bad));
}

TEST_CASE("classify_edge") {
  const PhyloNetwork tri = fixtures::net(fixtures::kTriangle);
  const EdgeClass root = classify_edge(tri, tri.root_edge());
  CHECK(root.tree_edge());
  CHECK(root.pure);
  CHECK(root.position == EdgePosition::Root);
  for (EdgeId e = 0; e < tri.edge_count(); ++e) {
    if (!tri.is_reticulation_edge(e)) continue;
    const EdgeClass c = classify_edge(tri, e);
    CHECK(c.reticulation_edge);
    CHECK_FALSE(c.pure);
  }
  // Leaf edges sit at the fringe.
  for (VertexId leaf : tri.leaves()) {
    const EdgeClass c = classify_edge(tri, tri.in_edges(leaf)[0]);
    CHECK(c.position == EdgePosition::LeafIncident);
  }
}

TEST_CASE("descendant edge counts") {
  const PhyloNetwork tri = fixtures::net(fixtures::kTriangle);
  CHECK(descendant_edge_count(tri, tri.root_edge()) == tri.edge_count() - 1);
  for (VertexId leaf : tri.leaves()) CHECK(descendant_edge_count(tri, tri.in_edges(leaf)[0]) == 0);

  // x = child of root; v = the tree vertex between x and the reticulation.
  const VertexId x = tri.head(tri.root_edge());
  const VertexId h = tri.reticulations()[0];
  VertexId v = kNoVertex;
  for (EdgeId e : tri.out_edges(x)) {
    if (tri.head(e) != h) v = tri.head(e);
  }
  CHECK(descendant_edge_count(tri, edge_between(tri, x, v)) == 3);
  CHECK(tree_descendant_edge_count(tri, edge_between(tri, x, h)) == 1);

  // delta of the root edge is m - 1 = 2n + 3r - 2, which is 17 for n = 5, r = 3.
  const PhyloNetwork big = gen_random_tree_child(5, 3, 11);
  CHECK(descendant_edge_count(big, big.root_edge()) == 17);

  const PhyloNetwork tree = fixtures::net(fixtures::kBalanced4);
  CHECK(tree_descendant_edge_count(tree, tree.root_edge()) ==
        descendant_edge_count(tree, tree.root_edge()));

  const DescendantCounts all = descendant_counts(big);
  for (EdgeId e = 0; e < big.edge_count(); ++e) {
    CHECK(all.all[e] == descendant_edge_count(big, e));
    CHECK(all.tree[e] == tree_descendant_edge_count(big, e));
    CHECK(all.tree[e] <= all.all[e]);
  }
}

TEST_CASE("tree paths") {
  const PhyloNetwork tri = fixtures::net(fixtures::kTriangle);
  for (VertexId v = 0; v < tri.vertex_count(); ++v) CHECK(has_tree_path(tri, v));
  const PhyloNetwork bad = fixtures::net("(((a)#H1,(b)#H2),(#H1,#H2));");
  bool some_false = false;
  for (VertexId v = 0; v < bad.vertex_count(); ++v) {
    if (!has_tree_path(bad, v)) some_false = true;
    if (bad.is_leaf(v)) CHECK(has_tree_path(bad, v));
  }
  CHECK(some_false);
  CHECK(tree_path_flags(bad) == [&] {
    std::vector<bool> f;
    for (VertexId v = 0; v < bad.vertex_count(); ++v) f.push_back(has_tree_path(bad, v));
    return f;
  }());
}

TEST_CASE("suboperations") {
  const PhyloNetwork tree = fixtures::net(fixtures::kBalanced4);
  const EdgeId e = tree.root_edge();
  GraphDraft draft(tree);
  const VertexId w = draft.subdivide(e);
  draft.suppress(w);
  CHECK(is_isomorphic(draft.finalize(), tree));

  // Prune leaf c of ((a,b),c) and regraft onto the edge into a.
  const PhyloNetwork cat = fixtures::net(fixtures::kCaterpillar3);
  const EdgeId leaf_c = cat.in_edges(*cat.find_leaf("c"))[0];
  const EdgeId leaf_a = cat.in_edges(*cat.find_leaf("a"))[0];
  const std::vector<SubAction> moves{subop::Prune{leaf_c}, subop::Regraft{leaf_c, leaf_a}};
  const PhyloNetwork moved = suboperate(cat, moves);
  CHECK(moved.leaf_count() == 3);
  CHECK(moved.edge_count() == 5);
  CHECK(is_tree_child(moved));
  CHECK(canonical_form(moved).key == "(b,(a,c));");

  const VertexId top = tree.head(tree.root_edge());
  const std::vector<SubAction> bad{subop::Suppress{top}};
  CHECK(code_of([&] { suboperate(tree, bad); }) == ErrorCode::InvalidSuboperation);
}

TEST_CASE("edge handles round-trip") {
  const PhyloNetwork net = fixtures::net(fixtures::kFourCycle);
  for (EdgeId e = 0; e < net.edge_count(); ++e) CHECK(net.find_edge(net.handle(e)) == e);
}
