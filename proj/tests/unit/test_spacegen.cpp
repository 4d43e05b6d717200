#include <doctest.h>

#include <set>

#include "snprnet/canon.hpp"
#include "snprnet/errors.hpp"
#include "snprnet/spacegen.hpp"
#include "support/cherry_builder.hpp"
#include "support/fixtures.hpp"
#include "support/iso_oracle.hpp"

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

std::int64_t sum_delta(const PhyloNetwork& net) {
  std::int64_t s = 0;
  for (EdgeId e = 0; e < net.edge_count(); ++e) s += static_cast<std::int64_t>(descendant_edge_count(net, e));
  return s;
}

}  // namespace

TEST_CASE("default taxa") {
  CHECK(default_taxa(3) == std::vector<std::string>{"a", "b", "c"});
  CHECK(default_taxa(27).front() == "t1");
  CHECK(default_taxa(27).back() == "t27");
}

TEST_CASE("chains of triangles") {
  for (int n = 2; n <= 7; ++n) {
    const PhyloNetwork chain = gen_chain(n);
    CHECK(is_tree_child(chain));
    CHECK(chain.leaf_count() == static_cast<std::size_t>(n));
    CHECK(chain.reticulation_count() == static_cast<std::size_t>(n - 1));
    const StructureCensus c = census(chain);
    CHECK(c.triangles == n - 1);
    const NeighbourhoodReport rep = verify(chain);
    CHECK(rep.formula.snpr_minus.neighbours == n - 1);
    CHECK(rep.oracle.by_kind.at(OpKind::SNPRMinus).neighbour_keys.size() ==
          static_cast<std::size_t>(n - 1));
  }
  CHECK(canonical_form(gen_chain(2)) == canonical_form(fixtures::net(fixtures::kTriangle)));
  CHECK(code_of([] { gen_chain(1); }) == ErrorCode::BadParam);
}

TEST_CASE("balanced trees") {
  for (int k = 1; k <= 6; ++k) {
    const PhyloNetwork t = gen_balanced(k);
    const std::int64_t n = std::int64_t{1} << k;
    CHECK(t.leaf_count() == static_cast<std::size_t>(n));
    CHECK(t.reticulation_count() == 0);
    CHECK(sum_delta(t) == 2 * n * k - 2 * n + 2);
  }
  CHECK(code_of([] { gen_balanced(0); }) == ErrorCode::BadParam);
  CHECK(code_of([] { gen_balanced(21); }) == ErrorCode::BadParam);
}

TEST_CASE("random trees and networks") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const PhyloNetwork t = gen_random_tree(7, seed);
    CHECK(t.reticulation_count() == 0);
    CHECK(t.leaf_count() == 7);
    CHECK(canonical_form(t) == canonical_form(gen_random_tree(7, seed)));
    const int r = static_cast<int>(seed % 7);
    const PhyloNetwork net = gen_random_tree_child(7, r, seed);
    CHECK(is_tree_child(net));
    CHECK(net.leaf_count() == 7);
    CHECK(net.reticulation_count() == static_cast<std::size_t>(r));
    CHECK(canonical_form(net) == canonical_form(gen_random_tree_child(7, r, seed)));
  }
  std::set<std::string> distinct;
  for (std::uint64_t seed = 0; seed < 30; ++seed) distinct.insert(canonical_form(gen_random_tree(7, seed)).key);
  CHECK(distinct.size() > 1);
  CHECK(code_of([] { gen_random_tree_child(4, 4, 1); }) == ErrorCode::BadParam);
  CHECK(code_of([] { gen_random_tree(1, 1); }) == ErrorCode::BadParam);
}

TEST_CASE("all rooted trees") {
  CHECK(all_rooted_trees(2).size() == 1);
  CHECK(all_rooted_trees(3).size() == 3);
  CHECK(all_rooted_trees(4).size() == 15);
  const auto five = all_rooted_trees(5);
  CHECK(five.size() == 105);
  std::set<std::string> keys;
  for (const PhyloNetwork& t : five) keys.insert(canonical_form(t).key);
  CHECK(keys.size() == 105);
}

TEST_CASE("exhaustive spaces") {
  CHECK(gen_exhaustive(3, 0).size() == 3);
  CHECK(gen_exhaustive(4, 0).size() == 15);
  // (a,b) and the two triangle networks, which differ in the leaf below the
  // reticulation.
  CHECK(gen_exhaustive(2, 1).size() == 3);
  const auto three = gen_exhaustive(3, 2);
  CHECK(three.size() == 66);
  for (const auto& [key, net] : three) {
    CHECK(is_tree_child(net));
    CHECK(key == canonical_form(net));
  }
  CHECK(code_of([] { gen_exhaustive(6, 0); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { gen_exhaustive(4, 3, ExhaustiveLimits{5, 100}); }) == ErrorCode::CapExceeded);
  CHECK(code_of([] { gen_exhaustive(1, 0); }) == ErrorCode::BadParam);
}

TEST_CASE("exhaustive spaces match an independent construction") {
  for (const auto& [n, r] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
    std::vector<PhyloNetwork> classes;
    cherry_builder::for_each_network(n, r, [&](const PhyloNetwork& net) {
      for (const PhyloNetwork& c : classes) {
        if (iso_oracle::isomorphic(c, net)) return;
      }
      classes.push_back(net);
    });
    const auto space = gen_exhaustive(n, r);
    CHECK(classes.size() == space.size());
    for (const PhyloNetwork& c : classes) CHECK(space.count(canonical_form(c)) == 1);
  }
}

TEST_CASE("distance") {
  const PhyloNetwork tri = fixtures::net(fixtures::kTriangle);
  CHECK(bfs_distance(tri, tri, 3) == 0);
  CHECK(bfs_distance(tri, fixtures::net("(a,b);"), 3) == 1);
  CHECK(code_of([&] { bfs_distance(tri, fixtures::net("(a,c);"), 3); }) == ErrorCode::TaxonMismatch);

  std::vector<PhyloNetwork> space;
  for (auto& [k, net] : gen_exhaustive(3, 1)) space.push_back(net);
  for (std::size_t i = 0; i < space.size(); ++i) {
    for (std::size_t j = i + 1; j < space.size(); ++j) {
      const auto d = bfs_distance(space[i], space[j], 8);
      REQUIRE(d.has_value());
      CHECK(*d >= 1);
      // Largest distance seen over all of n = 2 and n = 3 is 2n - 2.
      CHECK(*d <= 2 * 3);
      CHECK(bfs_distance(space[j], space[i], 8) == d);
    }
  }
  // The cap is honoured.
  CHECK_FALSE(bfs_distance(fixtures::net("(((a,b),c),d);"), fixtures::net("((a,c),(b,d));"), 0).has_value());
}
