#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "splits/leaves_fpt.hpp"
#include "splits/oracle.hpp"

using namespace splits;

namespace {

int multiset_total(const std::map<Value, int>& m) {
  int t = 0;
  for (const auto& [v, c] : m) t += c;
  return t;
}

int degree_leaves(const WeightedTree& t) {
  std::vector<int> deg(t.n, 0);
  for (const auto& [u, v] : t.edges) {
    ++deg[u];
    ++deg[v];
  }
  int leaves = 0;
  for (int v = 0; v < t.n; ++v) leaves += deg[v] == 1;
  return leaves;
}

}  // namespace

TEST_CASE("leaf_count") {
  CHECK(leaf_count({1, 2, 1}) == 2);
  CHECK(leaf_count({1, 1, 1, 2}) == 3);
  CHECK(leaf_count({2, 3}) == 0);
}

TEST_CASE("solve_leaves_fpt examples") {
  auto p3 = solve_leaves_fpt({1, 1}, 3);
  REQUIRE(p3);
  CHECK(split_multiset(p3->first) == std::vector<Value>{1, 1});

  // needs a singleton grouping step
  auto p4 = solve_leaves_fpt({1, 2, 1}, 4);
  REQUIRE(p4);
  CHECK(split_multiset(p4->first) == std::vector<Value>{1, 1, 2});
  CHECK(degree_leaves(p4->first) == 2);

  // passes precheck, but no tree has three edges splitting 3|3
  CHECK(!solve_leaves_fpt({1, 1, 3, 3, 3}, 6));

  CHECK_THROWS_AS(solve_leaves_fpt({1, 1}, 4), std::invalid_argument);
  CHECK_THROWS_AS(solve_leaves_fpt({1, 3}, 3), std::invalid_argument);  // precheck
}

TEST_CASE("degenerate sizes") {
  auto single = solve_leaves_fpt({}, 1);
  REQUIRE(single);
  CHECK(single->first.n == 1);

  auto edge = solve_leaves_fpt({1}, 2);
  REQUIRE(edge);
  CHECK(edge->first.n == 2);

  CHECK_THROWS_AS(solve_leaves_fpt({2, 2}, 3), std::invalid_argument);  // fails precheck
  CHECK(!solve_leaves_fpt({2, 2, 2}, 4));  // fewer than two 1-splits, no tree fits
}

TEST_CASE("grow_step case classification") {
  GrowState accept = initial_grow_state({1, 1}, 3);
  accept.root_weight = 1;
  CHECK(grow_step(accept).kind == GrowOutcome::Accept);

  // A holds a value at most b
  GrowState low = initial_grow_state({1, 1, 2, 3}, 5);
  low.available[1] = 1;
  CHECK(grow_step(low).kind == GrowOutcome::Reject);

  // more (b+1)s available than b-edges to subdivide
  GrowState over = initial_grow_state({1, 2, 2, 3, 3}, 6);
  over.children = {{1, 1}};
  over.placed = 1;
  over.root_weight = 5;
  CHECK(grow_step(over).kind == GrowOutcome::Reject);

  // exact balance forces subdivision of every b-edge
  GrowState forced = initial_grow_state({1, 1, 2, 2}, 5);
  GrowOutcome fo = grow_step(forced);
  REQUIRE(fo.kind == GrowOutcome::Forced);
  REQUIRE(fo.next.size() == 1);
  const GrowState& nx = fo.next[0];
  CHECK(nx.root_weight == forced.root_weight - 2);
  CHECK(nx.children.size() == 2);
  for (const auto& c : nx.children) CHECK(c.split == 2);
  CHECK(nx.used.at(1) == 2);
  CHECK(nx.available.empty());

  // branch: only the singleton subdivision survives (1+1+1 = 3 unavailable)
  GrowState branch = initial_grow_state({1, 1, 1, 2}, 5);
  CHECK(branch.root_weight == 2);
  GrowOutcome br = grow_step(branch);
  REQUIRE(br.kind == GrowOutcome::Branch);
  REQUIRE(br.next.size() == 1);
  CHECK(br.next[0].children.size() == 3);
  CHECK(br.next[0].root_weight == 1);
}

TEST_CASE("partition conservation along transitions") {
  GrowState st = initial_grow_state({1, 1, 1, 2, 3, 5, 5}, 8);
  std::vector<GrowState> frontier{st};
  std::vector<Value> universe = sorted({1, 1, 1, 2, 3, 5, 5});
  for (int depth = 0; depth < 6 && !frontier.empty(); ++depth) {
    std::vector<GrowState> next;
    for (const auto& s : frontier) {
      GrowOutcome o = grow_step(s);
      for (const auto& nx : o.next) {
        CHECK(nx.root_weight < s.root_weight);
        CHECK(nx.children.size() <= s.children.size());
        std::vector<Value> all;
        for (const auto& [v, c] : nx.available) all.insert(all.end(), c, v);
        for (const auto& [v, c] : nx.used) all.insert(all.end(), c, v);
        for (const auto& c : nx.children) all.push_back(c.split);
        CHECK(sorted(all) == universe);
        CHECK(nx.root_weight + nx.placed == nx.n);
        next.push_back(nx);
      }
    }
    frontier = std::move(next);
  }
}

TEST_CASE("oracle equivalence for n <= 7") {
  // harvest every realizable multiset, check the solver finds all of them
  for (int n = 3; n <= 7; ++n) {
    std::set<std::vector<Value>> realizable;
    TreeStream stream(n);
    while (auto t = stream.next()) realizable.insert(split_multiset(*t));
    CHECK(!realizable.empty());
    for (const auto& s : realizable) {
      auto sol = solve_leaves_fpt(s, n);
      REQUIRE_MESSAGE(sol, "n=" << n);
      CHECK(split_multiset(sol->first) == s);
      CHECK(degree_leaves(sol->first) == leaf_count(s));
    }

    // random multisets passing precheck; compare against the oracle
    std::mt19937_64 rng(1000 + n);
    Instance inst;
    inst.weights.assign(n, 1);
    for (int rep = 0; rep < 60; ++rep) {
      inst.splits.clear();
      for (int i = 0; i < n - 1; ++i)
        inst.splits.push_back(1 + static_cast<Value>(rng() % (n / 2)));
      inst.splits = sorted(inst.splits);
      if (!precheck(inst).ok) continue;
      bool fpt = static_cast<bool>(solve_leaves_fpt(inst.splits, n));
      bool oracle = realizable.count(inst.splits) > 0;
      CHECK_MESSAGE(fpt == oracle, "n=" << n);
    }
  }
}

TEST_CASE("unused helper coverage") {
  GrowState st = initial_grow_state({1, 1, 2}, 4);
  CHECK(multiset_total(st.available) == 1);
  CHECK(st.children.size() == 2);
  CHECK(st.root_weight == 2);
}
