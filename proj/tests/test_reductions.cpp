#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <random>

#include "doctest.h"
#include "splits/io.hpp"
#include "splits/path_dp.hpp"
#include "splits/reductions.hpp"

using namespace splits;

namespace {

Value vsum(const std::vector<Value>& v) { return std::accumulate(v.begin(), v.end(), Value{0}); }

int max_deg(const WeightedTree& t) {
  std::vector<int> deg(t.n, 0);
  for (const auto& [u, v] : t.edges) {
    ++deg[u];
    ++deg[v];
  }
  return *std::max_element(deg.begin(), deg.end());
}

int leaf_total(const WeightedTree& t) {
  std::vector<int> deg(t.n, 0);
  for (const auto& [u, v] : t.edges) {
    ++deg[u];
    ++deg[v];
  }
  int leaves = 0;
  for (int v = 0; v < t.n; ++v) leaves += deg[v] == 1;
  return leaves;
}

const NmtsInstance kM1 = make_nmts({1}, {2}, {3}, true);

}  // namespace

TEST_CASE("make_nmts refuses unnormalized input") {
  CHECK_THROWS_AS(make_nmts({1}, {2}, {4}, false), std::invalid_argument);  // unbalanced
  CHECK_THROWS_AS(make_nmts({2}, {2}, {4}, true), std::invalid_argument);   // not distinct
  CHECK_THROWS_AS(make_nmts({3}, {2}, {5}, true), std::invalid_argument);   // a_m >= b_m
  NmtsInstance ok = make_nmts({2, 1}, {4, 3}, {4, 6}, false);
  CHECK(ok.a == std::vector<Value>{1, 2});  // sorted by the constructor
}

TEST_CASE("verify_schedule") {
  ScdInstance scd{{2, 3, 5}, {2, 5, 5}};
  CHECK(verify_schedule(scd, Schedule{{2, 3}, {5}}).ok);
  CHECK(!verify_schedule(scd, Schedule{{3, 2}, {5}}).ok);  // no job ends at 2
  CHECK(!verify_schedule(scd, Schedule{{2, 3}, {4}}).ok);  // wrong job multiset
  CHECK(verify_schedule(ScdInstance{}, Schedule{}).ok);

  // all deadlines can be hit while the totals still do not balance
  ScdInstance unbalanced{{3, 4, 3, 1}, {1, 3, 7, 10}};
  Verdict v = verify_schedule(unbalanced, Schedule{{3, 4, 3}, {1}});
  CHECK(!v.ok);
}

TEST_CASE("scd_to_wsr2") {
  auto [inst, trace] = scd_to_wsr2(ScdInstance{{2, 3, 5}, {2, 5, 5}});
  CHECK(inst.weights == std::vector<Value>{2, 3, 5});
  CHECK(inst.splits == std::vector<Value>{2, 5});
  CHECK(inst.shape == Shape::path);
  CHECK(!trace.early_no);

  auto [no_inst, no_trace] = scd_to_wsr2(ScdInstance{{2, 2}, {2, 3}});
  CHECK(no_trace.early_no);

  auto [one, one_trace] = scd_to_wsr2(ScdInstance{{4}, {4}});
  CHECK(one.weights == std::vector<Value>{4});
  CHECK(one.splits.empty());
  CHECK(!one_trace.early_no);
}

TEST_CASE("schedule_to_path and path_to_schedule") {
  ScdInstance scd{{2, 3, 5}, {2, 5, 5}};
  auto [inst, trace] = scd_to_wsr2(scd);

  PathSolution p = schedule_to_path(Schedule{{2, 3}, {5}}, trace);
  CHECK(p.ordering == std::vector<Value>{2, 3, 5});
  CHECK(p.edge_splits == std::vector<Value>{2, 5});

  CHECK_THROWS_AS(schedule_to_path(Schedule{{5}, {3, 2}}, trace), std::invalid_argument);

  Schedule s = path_to_schedule(p, trace);
  CHECK(verify_schedule(scd, s).ok);

  PathSolution rev;
  rev.ordering = {5, 3, 2};
  rev.edge_splits = path_edge_splits(rev.ordering);
  Schedule s2 = path_to_schedule(rev, trace);
  CHECK(verify_schedule(scd, s2).ok);

  // single vertex
  auto [one_inst, one_trace] = scd_to_wsr2(ScdInstance{{4}, {4}});
  PathSolution single{{4}, {}};
  Schedule s3 = path_to_schedule(single, one_trace);
  CHECK(s3.p1 == std::vector<Value>{4});
  CHECK(s3.p2.empty());
  PathSolution back = schedule_to_path(s3, one_trace);
  CHECK(back.ordering == std::vector<Value>{4});
}

TEST_CASE("dnmts blow-up fixture") {
  BlowupTriple t = dnmts_blowup(kM1);
  CHECK(t.x == std::vector<Value>{10, 12});
  CHECK(t.y == std::vector<Value>{28, 30});
  CHECK(t.z == std::vector<Value>{38, 42});
  CHECK(t.x[1] + t.y[1] == t.z[1]);

  CHECK_THROWS_AS(dnmts_blowup(make_nmts({1}, {2}, {3}, false)), std::invalid_argument);
}

TEST_CASE("dnmts blow-up properties on random instances") {
  for (int seed = 0; seed < 200; ++seed) {
    int m = 1 + seed % 4;
    NmtsInstance inst = gen_nmts(true, m, 12, 9000 + seed, seed % 2 == 0);
    BlowupTriple t = dnmts_blowup(inst);  // asserts properties internally
    Value bm = inst.b.back();
    for (size_t i = 0; i < t.x.size(); ++i) {
      CHECK(t.x[i] % 2 == 0);
      CHECK(t.x[i] >= 2 * bm + 4);
      CHECK(t.x[i] <= 4 * bm + 4);
      CHECK(t.y[i] >= 6 * bm + 12);
      CHECK(t.y[i] <= 8 * bm + 14);
      CHECK(t.z[i] >= 8 * bm + 16);
      CHECK(t.z[i] <= 12 * bm + 18);
    }
  }
}

TEST_CASE("dnmts_to_scd fixture and conservation") {
  auto [scd, trace] = dnmts_to_scd(kM1);
  CHECK(scd.deadlines ==
        std::vector<Value>{9, 10, 11, 12, 38, 38, 47, 48, 49, 50, 80, 80});
  CHECK(sorted(scd.jobs) ==
        sorted({10, 12, 28, 30, 1, 1, 9, 9, 1, 2, 26, 31}));
  CHECK(vsum(scd.jobs) == 160);

  for (int seed = 0; seed < 50; ++seed) {
    int m = 1 + seed % 4;
    NmtsInstance inst = gen_nmts(true, m, 12, 4000 + seed, true);
    auto [s, tr] = dnmts_to_scd(inst);
    size_t n = m + 1;
    CHECK(s.jobs.size() == 2 * n * n + 2 * n);
    CHECK(s.deadlines.size() == 2 * n * n + 2 * n);
    CHECK(vsum(s.jobs) == 2 * vsum(tr.blowup.z));
  }
}

TEST_CASE("dnmts forward witness chain") {
  auto [scd, trace] = dnmts_to_scd(kM1);
  Schedule sched =
      dnmts_solution_to_schedule({{1, 1}, {2, 2}}, scd, trace);
  CHECK(verify_schedule(scd, sched).ok);
  CHECK(sched.p1 == std::vector<Value>{10, 28, 12, 30});

  CHECK_THROWS_AS(dnmts_solution_to_schedule({{1, 2}, {2, 2}}, scd, trace),
                  std::invalid_argument);

  // compose through the path reduction
  auto [wsr, wtrace] = scd_to_wsr2(scd);
  CHECK(!wtrace.early_no);
  PathSolution path = schedule_to_path(sched, wtrace);
  CHECK(sorted(path.ordering) == sorted(wsr.weights));
  CHECK(sorted(path_edge_splits(path.ordering)) == sorted(wsr.splits));

  for (int seed = 0; seed < 40; ++seed) {
    int m = 1 + seed % 3;
    NmtsInstance inst = gen_nmts(true, m, 12, 7000 + seed, true);
    auto matching = find_matching(inst);
    REQUIRE(matching);
    auto [s, tr] = dnmts_to_scd(inst);
    std::vector<std::pair<int, int>> blow_matching = *matching;
    blow_matching.push_back({m + 1, m + 1});
    Schedule sc = dnmts_solution_to_schedule(blow_matching, s, tr);
    CHECK(verify_schedule(s, sc).ok);
    auto [w, wt] = scd_to_wsr2(s);
    PathSolution pp = schedule_to_path(sc, wt);
    CHECK(sorted(path_edge_splits(pp.ordering)) == sorted(w.splits));
  }
}

TEST_CASE("nmts_to_sr3 fixture") {
  NmtsInstance inst = make_nmts({1, 2, 3, 4}, {5, 6, 7, 8}, {6, 8, 10, 12}, false);
  auto [sr3, trace] = nmts_to_sr3(inst);
  CHECK(trace.sr3_a == std::vector<Value>{27, 28, 29, 30});
  CHECK(trace.sr3_b == std::vector<Value>{48, 49, 50, 51});
  CHECK(trace.sr3_s == std::vector<Value>{75, 77, 79, 81});
  CHECK(trace.sr3_n == 318);
  CHECK(sr3.weights.size() == 318);
  CHECK(sr3.splits.size() == 317);
  CHECK(sr3.max_degree == 3);
  for (Value red : {76, 78, 80, 82})
    CHECK(std::count(sr3.splits.begin(), sr3.splits.end(), red) >= 1);
  CHECK(std::count(sr3.splits.begin(), sr3.splits.end(), 155) == 1);
  CHECK(trace.sr3_a[0] + trace.sr3_b[0] == trace.sr3_s[0]);

  CHECK_THROWS_AS(nmts_to_sr3(make_nmts({1, 2}, {3, 4}, {4, 6}, false)),
                  std::invalid_argument);
}

TEST_CASE("nmts forward witness") {
  NmtsInstance inst = make_nmts({1, 2, 3, 4}, {5, 6, 7, 8}, {6, 8, 10, 12}, false);
  auto [sr3, trace] = nmts_to_sr3(inst);
  auto [tree, assignment] =
      nmts_solution_to_tree({{1, 1}, {2, 2}, {3, 3}, {4, 4}}, sr3, trace);
  CHECK(tree.n == 318);
  CHECK(validate(sr3, tree).ok);
  CHECK(max_deg(tree) == 3);
  CHECK(leaf_total(tree) == 8);

  for (int seed = 0; seed < 10; ++seed) {
    int m = 4 + seed % 2;
    NmtsInstance r = gen_nmts(false, m, 10, 300 + seed, true);
    auto matching = find_matching(r);
    REQUIRE(matching);
    auto [ri, rt] = nmts_to_sr3(r);
    auto [rtree, rassign] = nmts_solution_to_tree(*matching, ri, rt);
    CHECK(validate(ri, rtree).ok);
    CHECK(max_deg(rtree) == 3);
    CHECK(leaf_total(rtree) == 2 * m);
  }
}

TEST_CASE("wsr2_to_caterpillar") {
  Instance src;
  src.weights = {1, 2};
  src.splits = {1};
  src.shape = Shape::path;
  auto [cat, trace] = wsr2_to_caterpillar(src);
  CHECK(trace.omega == 5);
  CHECK(trace.scale == 20);
  CHECK(trace.block_weights == std::vector<Value>{20, 40, 100, 100});
  CHECK(cat.weights.size() == 260);
  CHECK(cat.splits.size() == 259);
  CHECK(cat.shape == Shape::caterpillar);
  CHECK(std::count(cat.splits.begin(), cat.splits.end(), 120) == 1);
  CHECK(std::count(cat.splits.begin(), cat.splits.end(), 100) == 2);  // aux splits stop at 99

  // the scaled path instance is solvable
  Instance ip;
  ip.weights = trace.block_weights;
  ip.splits = {120, 100, 100};
  ip.shape = Shape::path;
  auto path = solve_path_dp(ip);
  REQUIRE(path);
  CHECK(sorted(path_edge_splits(path->ordering)) == sorted(ip.splits));

  // trivial source: single weight, no splits
  Instance tiny;
  tiny.weights = {1};
  auto [tc, tt] = wsr2_to_caterpillar(tiny);
  CHECK(tt.block_weights.size() == 3);
}

TEST_CASE("tiny scd/wsr2 biconditional") {
  std::mt19937_64 rng(2718);
  int agreements = 0;
  for (int rep = 0; rep < 150; ++rep) {
    int n = 1 + static_cast<int>(rng() % 5);
    ScdInstance scd;
    for (int i = 0; i < n; ++i) scd.jobs.push_back(1 + static_cast<Value>(rng() % 4));
    // harvest deadlines from a random schedule, sometimes perturbed
    std::vector<Value> jobs = scd.jobs;
    std::shuffle(jobs.begin(), jobs.end(), rng);
    size_t cut = rng() % (jobs.size() + 1);
    Value t1 = 0, t2 = 0;
    for (size_t i = 0; i < jobs.size(); ++i) {
      if (i < cut)
        scd.deadlines.push_back(t1 = checked_add(t1, jobs[i]));
      else
        scd.deadlines.push_back(t2 = checked_add(t2, jobs[i]));
    }
    if (rep % 2) {
      size_t k = rng() % scd.deadlines.size();
      scd.deadlines[k] = std::max<Value>(1, scd.deadlines[k] + static_cast<int>(rng() % 5) - 2);
    }
    std::sort(scd.deadlines.begin(), scd.deadlines.end());

    bool scd_feasible = static_cast<bool>(solve_exact_scd(scd));
    auto [inst, trace] = scd_to_wsr2(scd);
    bool path_feasible = !trace.early_no && static_cast<bool>(solve_exact_path(inst));
    CHECK(scd_feasible == path_feasible);
    agreements += scd_feasible == path_feasible;
  }
  CHECK(agreements == 150);
}
