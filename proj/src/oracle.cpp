#include <algorithm>
#include <atomic>
#include <thread>

#include "snprnet/canon.hpp"
#include "snprnet/census.hpp"
#include "snprnet/errors.hpp"

namespace snprnet {

namespace {

struct Outcome {
  bool tree_child = false;
  std::string key;
};

// Applies each op and canonicalizes the tree-child results. Slots are indexed
// like `ops`, so the output is independent of scheduling.
std::vector<Outcome> evaluate(const PhyloNetwork& net, const std::vector<RearrangementOp>& ops,
                              int jobs) {
  std::vector<Outcome> outcomes(ops.size());
  auto work = [&](std::size_t i) {
    PhyloNetwork result = apply(net, ops[i]);
    if (!is_tree_child(result)) return;
    outcomes[i].tree_child = true;
    outcomes[i].key = canonical_form(result).key;
  };
  const std::size_t workers =
      std::min<std::size_t>(jobs > 1 ? static_cast<std::size_t>(jobs) : 1, ops.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < ops.size(); ++i) work(i);
    return outcomes;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= ops.size() || failed.load()) return;
        try {
          work(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return outcomes;
}

}  // namespace

Neighbourhood enumerate_neighbourhood(const PhyloNetwork& net, KindFilter kinds, int jobs) {
  if (!is_tree_child(net)) {
    throw Error(ErrorCode::NotTreeChild, "the neighbourhood oracle needs a tree-child network");
  }
  const std::string self = canonical_form(net).key;
  const auto ops = enumerate_ops(net, kinds, false);
  const auto outcomes = evaluate(net, ops, jobs);

  Neighbourhood out;
  for (OpKind kind : kCountedKinds) {
    if (kinds.includes(kind)) out.by_kind[kind];
  }
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!outcomes[i].tree_child) continue;
    OracleKindResult& res = out.by_kind[ops[i].kind];
    ++res.ops;
    if (outcomes[i].key == self) {
      ++res.trivial;
    } else {
      res.neighbour_keys.push_back(outcomes[i].key);
    }
  }
  for (auto& [kind, res] : out.by_kind) {
    std::sort(res.neighbour_keys.begin(), res.neighbour_keys.end());
    res.neighbour_keys.erase(std::unique(res.neighbour_keys.begin(), res.neighbour_keys.end()),
                             res.neighbour_keys.end());
  }
  return out;
}

std::int64_t NeighbourhoodReport::oracle_total() const {
  std::int64_t total = 0;
  for (const auto& [kind, res] : oracle.by_kind) {
    total += static_cast<std::int64_t>(res.neighbour_keys.size());
  }
  return total;
}

NeighbourhoodReport verify(const PhyloNetwork& net, int jobs) {
  NeighbourhoodReport report;
  report.formula = formula_breakdown(census(net));
  report.oracle = enumerate_neighbourhood(net, KindFilter{}, jobs);
  auto size_of = [&](OpKind kind) {
    return static_cast<std::int64_t>(report.oracle.by_kind.at(kind).neighbour_keys.size());
  };
  report.agrees_snpr = report.formula.snpr.neighbours == size_of(OpKind::SNPR);
  report.agrees_snpr_plus = report.formula.snpr_plus.neighbours == size_of(OpKind::SNPRPlus);
  report.agrees_snpr_minus = report.formula.snpr_minus.neighbours == size_of(OpKind::SNPRMinus);
  report.agrees_total = report.formula.total.neighbours == report.oracle_total();
  return report;
}

std::vector<RedundancyClass> redundancy_classes(const PhyloNetwork& net, OpKind kind) {
  if (!is_tree_child(net)) {
    throw Error(ErrorCode::NotTreeChild, "redundancy classes need a tree-child network");
  }
  const std::string self = canonical_form(net).key;
  const auto ops = enumerate_ops(net, KindFilter::only(kind), false);
  const auto outcomes = evaluate(net, ops, 1);
  std::map<std::string, std::vector<RearrangementOp>> groups;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (!outcomes[i].tree_child || outcomes[i].key == self) continue;
    groups[outcomes[i].key].push_back(ops[i]);
  }
  std::vector<RedundancyClass> out;
  out.reserve(groups.size());
  for (auto& [key, members] : groups) out.push_back({key, std::move(members)});
  return out;
}

}  // namespace snprnet
