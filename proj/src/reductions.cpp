#include "splits/reductions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace splits {

namespace {

Value vsum(const std::vector<Value>& v) {
  Value s = 0;
  for (Value x : v) s = checked_add(s, x);
  return s;
}

std::map<Value, int> counts(const std::vector<Value>& v) {
  std::map<Value, int> c;
  for (Value x : v) ++c[x];
  return c;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

NmtsInstance make_nmts(std::vector<Value> a, std::vector<Value> b, std::vector<Value> s,
                       bool distinct_required) {
  require(a.size() == b.size() && b.size() == s.size(), "nmts: lists must have equal length");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::sort(s.begin(), s.end());
  for (const auto* v : {&a, &b, &s})
    for (Value x : *v) require(x >= 1, "nmts: values must be positive");
  require(vsum(s) == checked_add(vsum(a), vsum(b)), "nmts: sum of S must equal sum of A and B");
  if (distinct_required && !a.empty()) {
    std::vector<Value> all;
    for (const auto* v : {&a, &b, &s}) all.insert(all.end(), v->begin(), v->end());
    std::sort(all.begin(), all.end());
    require(std::adjacent_find(all.begin(), all.end()) == all.end(),
            "dnmts: all 3m values must be pairwise distinct");
    require(a.back() < b.back(), "dnmts: requires a_m < b_m");
    require(s.back() <= checked_add(a.back(), b.back()), "dnmts: requires s_m <= a_m + b_m");
  }
  return NmtsInstance{std::move(a), std::move(b), std::move(s), distinct_required};
}

Verdict verify_schedule(const ScdInstance& scd, const Schedule& schedule) {
  Verdict v;
  std::vector<Value> used = schedule.p1;
  used.insert(used.end(), schedule.p2.begin(), schedule.p2.end());
  if (sorted(used) != sorted(scd.jobs)) v.fail("job multiset mismatch");
  for (Value j : used)
    if (j < 1) v.fail("non-positive job length " + std::to_string(j));

  // Dense packing from 0; end times are the per-processor prefix sums.
  std::map<Value, int> ends;
  for (const auto* proc : {&schedule.p1, &schedule.p2}) {
    Value t = 0;
    for (Value j : *proc) {
      t = checked_add(t, j);
      ++ends[t];
    }
  }
  for (const auto& [d, k] : counts(scd.deadlines)) {
    auto it = ends.find(d);
    int hit = it == ends.end() ? 0 : it->second;
    if (hit < k)
      v.fail("deadline " + std::to_string(d) + " needs " + std::to_string(k) +
             " job ends, got " + std::to_string(hit));
  }

  // Feasibility requires the total work to equal the two largest deadlines.
  size_t n = scd.deadlines.size();
  std::vector<Value> d = sorted(scd.deadlines);
  Value want = n == 0 ? 0 : (n == 1 ? d[0] : checked_add(d[n - 2], d[n - 1]));
  if (vsum(scd.jobs) != want)
    v.fail("job total " + std::to_string(vsum(scd.jobs)) +
           " does not equal the sum of the two largest deadlines " + std::to_string(want));
  return v;
}

std::pair<Instance, ReductionTrace> scd_to_wsr2(const ScdInstance& scd) {
  require(!scd.jobs.empty(), "scd_to_wsr2: instance must be nonempty");
  require(scd.jobs.size() == scd.deadlines.size(), "scd_to_wsr2: |jobs| must equal |deadlines|");
  ReductionTrace trace;
  trace.kind = "scd_to_wsr2";
  trace.scd = scd;
  trace.scd.deadlines = sorted(scd.deadlines);

  Instance out;
  out.weights = sorted(scd.jobs);
  out.splits = trace.scd.deadlines;
  out.splits.pop_back();  // the largest deadline is the merged one
  out.shape = Shape::path;

  size_t n = scd.jobs.size();
  Value want = n == 1 ? trace.scd.deadlines[0]
                      : checked_add(trace.scd.deadlines[n - 2], trace.scd.deadlines[n - 1]);
  if (vsum(scd.jobs) != want) {
    trace.early_no = true;
    trace.verdict.fail("job total " + std::to_string(vsum(scd.jobs)) +
                       " does not equal d_{n-1} + d_n = " + std::to_string(want));
  }
  return {std::move(out), std::move(trace)};
}

PathSolution schedule_to_path(const Schedule& schedule, const ReductionTrace& trace) {
  Verdict v = verify_schedule(trace.scd, schedule);
  require(v.ok, "schedule_to_path: schedule does not verify" +
                    (v.violations.empty() ? std::string() : ": " + v.violations.front()));
  PathSolution p;
  p.ordering = schedule.p1;
  p.ordering.insert(p.ordering.end(), schedule.p2.rbegin(), schedule.p2.rend());
  p.edge_splits = path_edge_splits(p.ordering);
  return p;
}

Schedule path_to_schedule(const PathSolution& path, const ReductionTrace& trace) {
  const ScdInstance& scd = trace.scd;
  size_t n = path.ordering.size();
  require(n == scd.jobs.size(), "path_to_schedule: length mismatch");
  require(sorted(path.ordering) == sorted(scd.jobs), "path_to_schedule: weights are not the jobs");
  std::vector<Value> want = sorted(scd.deadlines);
  want.pop_back();
  require(sorted(path_edge_splits(path.ordering)) == want,
          "path_to_schedule: path does not validate against the reduced instance");

  if (n == 1) return Schedule{{path.ordering[0]}, {}};
  Value second = sorted(scd.deadlines)[n - 2];
  std::vector<Value> splits = path_edge_splits(path.ordering);
  for (size_t cut = 0; cut + 1 < n; ++cut) {
    if (splits[cut] != second) continue;
    Schedule s;
    s.p1.assign(path.ordering.begin(), path.ordering.begin() + cut + 1);
    s.p2.assign(path.ordering.rbegin(), path.ordering.rend() - cut - 1);
    if (verify_schedule(scd, s).ok) return s;
  }
  throw std::invalid_argument("path_to_schedule: no cut at the second-largest deadline verifies");
}

BlowupTriple dnmts_blowup(const NmtsInstance& src) {
  require(src.distinct_required, "dnmts_blowup: requires dNMTS mode");
  int m = src.m();
  require(m >= 1, "dnmts_blowup: empty instance");
  Value bm = src.b.back();
  Value base = bm + 2;
  int n = m + 1;
  BlowupTriple t;
  for (int i = 0; i < m; ++i) {
    t.x.push_back(2 * (src.a[i] + base));
    t.y.push_back(2 * (src.b[i] + 3 * base));
    t.z.push_back(2 * (src.s[i] + 4 * base));
  }
  t.x.push_back(2 * (src.a.back() + 1 + base));
  t.y.push_back(2 * (src.b.back() + 1 + 3 * base));
  t.z.push_back(2 * (checked_add(src.a.back(), src.b.back()) + 2 + 4 * base));

  auto violated = [](const char* what) {
    throw std::logic_error(std::string("dnmts_blowup: property violated: ") + what);
  };
  for (const auto* v : {&t.x, &t.y, &t.z}) {
    for (Value e : *v)
      if (e <= 0 || e % 2 != 0) violated("evenness");
    for (size_t i = 0; i + 1 < v->size(); ++i)
      if ((*v)[i] >= (*v)[i + 1]) violated("strict increase");
  }
  for (int i = 0; i < n; ++i) {
    if (t.x[i] < 2 * bm + 4 || t.x[i] > 4 * bm + 4) violated("x range");
    if (t.y[i] < 6 * bm + 12 || t.y[i] > 8 * bm + 14) violated("y range");
    if (t.z[i] < 8 * bm + 16 || t.z[i] > 12 * bm + 18) violated("z range");
  }
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l)
      if (t.x[k] + t.y[l] == t.z[n - 1] && (k != n - 1 || l != n - 1))
        violated("only x_n + y_n may sum to z_n");
  std::vector<Value> xy = t.x;
  xy.insert(xy.end(), t.y.begin(), t.y.end());
  for (size_t p = 0; p < xy.size(); ++p)
    for (size_t q = p; q < xy.size(); ++q)
      for (Value z : t.z)
        if (xy[p] + xy[q] == z) {
          bool p_in_x = p < t.x.size(), q_in_y = q >= t.x.size();
          if (!(p_in_x && q_in_y)) violated("z sums must pair one x with one y");
        }
  return t;
}

std::pair<ScdInstance, ReductionTrace> dnmts_to_scd(const NmtsInstance& src) {
  ReductionTrace trace;
  trace.kind = "dnmts_to_scd";
  if (src.m() == 0) return {ScdInstance{}, std::move(trace)};

  BlowupTriple t = dnmts_blowup(src);
  trace.blowup = t;
  int n = src.m() + 1;

  ScdInstance scd;
  std::vector<Value> zprefix{0};
  for (Value z : t.z) zprefix.push_back(checked_add(zprefix.back(), z));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      Value r = checked_add(t.x[i], zprefix[j]);
      scd.deadlines.push_back(r);      // real
      scd.deadlines.push_back(r - 1);  // fake
    }
  for (int j = 1; j <= n; ++j) {
    scd.deadlines.push_back(zprefix[j]);  // double sum deadlines
    scd.deadlines.push_back(zprefix[j]);
  }
  std::sort(scd.deadlines.begin(), scd.deadlines.end());

  scd.jobs = t.x;
  scd.jobs.insert(scd.jobs.end(), t.y.begin(), t.y.end());
  scd.jobs.insert(scd.jobs.end(), static_cast<size_t>(n) * (n - 1), 1);  // blue
  scd.jobs.insert(scd.jobs.end(), n, t.x[0] - 1);  // red fill, corrected count
  for (int i = 1; i < n; ++i)
    scd.jobs.insert(scd.jobs.end(), n - 1, t.x[i] - 1 - t.x[i - 1]);  // red fill
  for (int i = 1; i < n; ++i) scd.jobs.push_back(t.x[i] - t.x[i - 1]);  // red overlap
  for (int i = 0; i + 1 < n; ++i) scd.jobs.push_back(t.z[i] - t.x[n - 1]);  // black fill
  scd.jobs.push_back(t.z[n - 1] - t.x[n - 1] + 1);  // black overlap
  std::sort(scd.jobs.begin(), scd.jobs.end());

  size_t expected = 2 * static_cast<size_t>(n) * n + 2 * n;
  if (scd.jobs.size() != expected || scd.deadlines.size() != expected)
    throw std::logic_error("dnmts_to_scd: job/deadline count mismatch");
  if (vsum(scd.jobs) != 2 * zprefix[n])
    throw std::logic_error("dnmts_to_scd: total job length must be twice the z sum");
  return {std::move(scd), std::move(trace)};
}

Schedule dnmts_solution_to_schedule(const std::vector<std::pair<int, int>>& matching,
                                    const ScdInstance& scd, const ReductionTrace& trace) {
  const BlowupTriple& t = trace.blowup;
  int n = static_cast<int>(t.x.size());
  if (n == 0 && matching.empty()) return Schedule{};
  require(static_cast<int>(matching.size()) == n, "matching must cover every segment");
  for (int j = 0; j < n; ++j) {
    auto [xi, yi] = matching[j];
    require(xi >= 1 && xi <= n && yi >= 1 && yi <= n, "matching index out of range");
    require(j + 1 == n || xi < n, "only the last segment may take the largest x job");
    require(t.x[xi - 1] + t.y[yi - 1] == t.z[j],
            "matching pair does not sum to the segment length: " + std::to_string(t.x[xi - 1]) +
                "+" + std::to_string(t.y[yi - 1]) + " != " + std::to_string(t.z[j]));
  }

  Schedule s;
  for (int j = 0; j < n; ++j) {
    int p = matching[j].first;  // 1-based x index of this segment
    s.p1.push_back(t.x[p - 1]);
    s.p1.push_back(t.y[matching[j].second - 1]);
    s.p2.push_back(t.x[0] - 1);  // red fill up to the first fake deadline
    if (j + 1 < n) {
      for (int i = 1; i <= n; ++i) {
        if (i == p) {
          s.p2.push_back(t.x[i] - t.x[i - 1]);  // red overlap spans fake to fake
        } else {
          s.p2.push_back(1);  // blue
          if (i < n) s.p2.push_back(t.x[i] - 1 - t.x[i - 1]);  // red fill
        }
      }
      s.p2.push_back(t.z[j] - t.x[n - 1]);  // black fill closes the segment
    } else {
      for (int i = 1; i < n; ++i) {
        s.p2.push_back(1);  // blue
        s.p2.push_back(t.x[i] - 1 - t.x[i - 1]);  // red fill
      }
      s.p2.push_back(t.z[n - 1] - t.x[n - 1] + 1);  // black overlap
    }
  }
  Verdict v = verify_schedule(scd, s);
  if (!v.ok)
    throw std::logic_error("dnmts_solution_to_schedule: constructed schedule fails: " +
                           (v.violations.empty() ? "?" : v.violations.front()));
  return s;
}

std::pair<Instance, ReductionTrace> nmts_to_sr3(const NmtsInstance& src) {
  int m = src.m();
  require(m >= 4, "nmts_to_sr3: needs m >= 4 (the backbone degenerates below that)");

  Value c = std::max(src.a.back(), src.b.back());
  ReductionTrace trace;
  trace.kind = "nmts_to_sr3";
  for (Value v : src.a) trace.sr3_a.push_back(v + 2 + 3 * c);
  for (Value v : src.b) trace.sr3_b.push_back(v + 3 + 5 * c);
  for (Value v : src.s) trace.sr3_s.push_back(v + 5 + 8 * c);

  Value n = 2 * m - 2;
  for (Value v : trace.sr3_a) n = checked_add(n, v);
  for (Value v : trace.sr3_b) n = checked_add(n, v);
  trace.sr3_n = n;

  Instance out;
  out.weights.assign(n, 1);
  out.max_degree = 3;
  auto add = [&](Value v) { out.splits.push_back(std::min(v, n - v)); };
  for (Value sv : trace.sr3_s) add(1 + sv);  // red
  Value black_acc = 0;
  for (int i = 1; i <= m; ++i) {
    black_acc = checked_add(black_acc, 1 + trace.sr3_s[i - 1]);
    if (i >= 2 && i <= m - 2) add((i - 1) + black_acc);  // black
  }
  for (Value av : trace.sr3_a)
    for (Value g = 1; g <= av; ++g) add(g);  // green
  for (Value bv : trace.sr3_b)
    for (Value g = 1; g <= bv; ++g) add(g);  // blue
  std::sort(out.splits.begin(), out.splits.end());
  if (static_cast<Value>(out.splits.size()) != n - 1)
    throw std::logic_error("nmts_to_sr3: split count must be n-1");
  return {std::move(out), std::move(trace)};
}

std::pair<WeightedTree, SplitAssignment> nmts_solution_to_tree(
    const std::vector<std::pair<int, int>>& matching, const Instance& sr3_instance,
    const ReductionTrace& trace) {
  int m = static_cast<int>(trace.sr3_s.size());
  require(static_cast<int>(matching.size()) == m, "matching must cover every target sum");
  for (int i = 0; i < m; ++i) {
    auto [ai, bi] = matching[i];
    require(ai >= 1 && ai <= m && bi >= 1 && bi <= m, "matching index out of range");
    require(trace.sr3_a[ai - 1] + trace.sr3_b[bi - 1] == trace.sr3_s[i],
            "matching pair does not hit its target sum");
  }

  WeightedTree tree;
  tree.n = static_cast<int>(trace.sr3_n);
  tree.weight.assign(tree.n, 1);
  int next = 0;
  auto fresh = [&] { return next++; };
  auto link = [&](int u, int v) { tree.edges.push_back(make_edge(u, v)); };

  // Backbone with m-2 vertices; black splits sit on its m-3 edges.
  std::vector<int> backbone;
  for (int i = 0; i < m - 2; ++i) {
    backbone.push_back(fresh());
    if (i > 0) link(backbone[i - 1], backbone[i]);
  }
  // Red-split edges: two at each backbone end, one at each interior vertex.
  // anchor[i] hosts the red edge carrying 1 + s_{i+1}.
  std::vector<int> anchor(m);
  anchor[0] = anchor[1] = backbone.front();
  anchor[m - 2] = anchor[m - 1] = backbone.back();
  for (int i = 2; i <= m - 3; ++i) anchor[i] = backbone[i - 1];

  auto grow_path = [&](int from, Value len) {
    int prev = from;
    for (Value k = 0; k < len; ++k) {
      int v = fresh();
      link(prev, v);
      prev = v;
    }
  };
  for (int i = 0; i < m; ++i) {
    int u = fresh();  // far endpoint of the red edge
    link(anchor[i], u);
    grow_path(u, trace.sr3_a[matching[i].first - 1]);
    grow_path(u, trace.sr3_b[matching[i].second - 1]);
  }
  if (next != tree.n) throw std::logic_error("nmts_solution_to_tree: vertex count mismatch");

  SplitAssignment assignment = compute_splits(tree);
  std::vector<Value> got;
  for (const auto& [e, v] : assignment.value) got.push_back(v);
  if (sorted(std::move(got)) != sorted(sr3_instance.splits))
    throw std::logic_error("nmts_solution_to_tree: splits of the built tree do not match");
  return {std::move(tree), std::move(assignment)};
}

std::pair<Instance, ReductionTrace> wsr2_to_caterpillar(const Instance& src) {
  require(!src.weights.empty(), "wsr2_to_caterpillar: source needs at least one weight");
  require(src.splits.size() + 1 == src.weights.size(),
          "wsr2_to_caterpillar: source must have one split less than weights");
  Value n = static_cast<Value>(src.weights.size()) + 2;
  Value omega = 1 + 2 * *std::max_element(src.weights.begin(), src.weights.end());
  Value scale = checked_mul(n, omega);

  ReductionTrace trace;
  trace.kind = "wsr2_to_caterpillar";
  trace.omega = omega;
  trace.scale = scale;

  std::vector<Value> ip_weights, ip_splits;
  for (Value w : src.weights) ip_weights.push_back(checked_mul(w, scale));
  ip_weights.push_back(checked_mul(omega, scale));
  ip_weights.push_back(checked_mul(omega, scale));
  for (Value s : src.splits) ip_splits.push_back(checked_mul(checked_add(s, omega), scale));
  ip_splits.push_back(checked_mul(omega, scale));
  ip_splits.push_back(checked_mul(omega, scale));
  trace.block_weights = ip_weights;

  Instance out;
  out.shape = Shape::caterpillar;
  out.max_degree = 3;
  Value total = 0;
  for (Value w : ip_weights) total = checked_add(total, w);
  out.weights.assign(total, 1);
  out.splits = ip_splits;  // original splits survive
  for (Value w : ip_weights)
    for (Value f = 1; f < w; ++f) out.splits.push_back(f);  // auxiliary splits
  std::sort(out.splits.begin(), out.splits.end());
  if (static_cast<Value>(out.splits.size()) != total - 1)
    throw std::logic_error("wsr2_to_caterpillar: split count must be total weight minus one");
  return {std::move(out), std::move(trace)};
}

}  // namespace splits
