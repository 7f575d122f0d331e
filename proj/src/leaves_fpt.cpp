#include "splits/leaves_fpt.hpp"

#include <algorithm>
#include <stdexcept>

namespace splits {

int leaf_count(const std::vector<Value>& splits) {
  return static_cast<int>(std::count(splits.begin(), splits.end(), 1));
}

GrowState initial_grow_state(const std::vector<Value>& splits, int n) {
  GrowState st;
  st.n = n;
  int k = leaf_count(splits);
  st.root_weight = n - k;
  for (int i = 1; i <= k; ++i) st.children.push_back({1, i});
  st.placed = k;
  for (Value s : splits)
    if (s != 1) ++st.available[s];
  return st;
}

namespace {

void take_from(std::map<Value, int>& ms, Value v, int count = 1) {
  auto it = ms.find(v);
  it->second -= count;
  if (it->second == 0) ms.erase(it);
}

int count_in(const std::map<Value, int>& ms, Value v) {
  auto it = ms.find(v);
  return it == ms.end() ? 0 : it->second;
}

}  // namespace

GrowOutcome grow_step(const GrowState& state) {
  if (state.root_weight == 1) return {GrowOutcome::Accept, {}};

  Value b = state.children.front().split;
  for (const auto& c : state.children) b = std::min(b, c.split);
  if (!state.available.empty() && state.available.begin()->first <= b)
    return {GrowOutcome::Reject, {}};

  int cb = 0;
  for (const auto& c : state.children) cb += c.split == b;
  int ca = count_in(state.available, b + 1);
  if (ca > cb) return {GrowOutcome::Reject, {}};

  if (ca == cb) {
    // Exactly enough (b+1)-values: every b-edge must be subdivided, no choice.
    if (state.root_weight - cb < 1) return {GrowOutcome::Reject, {}};
    GrowState next = state;
    for (auto& c : next.children) {
      if (c.split != b) continue;
      int z = ++next.placed;
      next.internal_edges.push_back(make_edge(z, c.root));
      c = {b + 1, z};
      ++next.used[b];
    }
    take_from(next.available, b + 1, cb);
    next.root_weight -= cb;
    return {GrowOutcome::Forced, {std::move(next)}};
  }

  // Branch: group some root edges under a new vertex whose split 1 + sum must
  // be available. Children with equal splits are interchangeable, so
  // candidates are subsets of value counts. A group need not touch a b-edge:
  // a minimal child can stay attached to the root for good while larger
  // subtrees keep growing (legs 1,2,3 of a spider need exactly that).
  std::vector<std::pair<Value, int>> groups;  // distinct child split -> count
  {
    std::map<Value, int> g;
    for (const auto& c : state.children) ++g[c.split];
    groups.assign(g.begin(), g.end());
  }
  struct Candidate {
    int total;
    std::vector<int> take;
  };
  std::vector<Candidate> candidates;
  std::vector<int> take(groups.size(), 0);
  while (true) {
    int total = 0;
    Value sum = 1;
    for (size_t i = 0; i < groups.size(); ++i) {
      total += take[i];
      sum = checked_add(sum, checked_mul(groups[i].first, take[i]));
    }
    if (total >= 1 && count_in(state.available, sum) > 0)
      candidates.push_back({total, take});
    size_t i = 0;
    for (; i < groups.size(); ++i) {
      if (++take[i] <= groups[i].second) break;
      take[i] = 0;
    }
    if (i == groups.size()) break;
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& a, const Candidate& c) {
                     if (a.total != c.total) return a.total < c.total;
                     return a.take < c.take;
                   });

  GrowOutcome out{GrowOutcome::Branch, {}};
  if (state.root_weight - 1 < 1) return out;  // no room for the group vertex
  for (const auto& cand : candidates) {
    GrowState next = state;
    int z = ++next.placed;
    Value sum = 1;
    std::vector<GrowState::Child> kept;
    std::vector<int> remaining = cand.take;
    for (const auto& c : next.children) {
      size_t gi = std::lower_bound(groups.begin(), groups.end(),
                                   std::make_pair(c.split, 0)) -
                  groups.begin();
      if (remaining[gi] > 0) {
        --remaining[gi];
        next.internal_edges.push_back(make_edge(z, c.root));
        sum = checked_add(sum, c.split);
        ++next.used[c.split];
      } else {
        kept.push_back(c);
      }
    }
    kept.push_back({sum, z});
    next.children = std::move(kept);
    take_from(next.available, sum);
    next.root_weight -= 1;
    out.next.push_back(std::move(next));
  }
  return out;
}

namespace {

std::optional<std::pair<WeightedTree, SplitAssignment>> search(
    const GrowState& state, const std::vector<Value>& want) {
  GrowOutcome step = grow_step(state);
  switch (step.kind) {
    case GrowOutcome::Accept: {
      WeightedTree tree;
      tree.n = state.n;
      tree.weight.assign(state.n, 1);
      tree.edges = state.internal_edges;
      for (const auto& c : state.children) tree.edges.push_back(make_edge(0, c.root));
      if (split_multiset(tree) != want) return std::nullopt;  // keep backtracking
      return std::make_pair(tree, compute_splits(tree));
    }
    case GrowOutcome::Reject:
      return std::nullopt;
    case GrowOutcome::Forced:
    case GrowOutcome::Branch:
      for (const auto& next : step.next)
        if (auto found = search(next, want)) return found;
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::pair<WeightedTree, SplitAssignment>> solve_leaves_fpt(
    const std::vector<Value>& splits, int n) {
  if (n < 1) throw std::invalid_argument("solve_leaves_fpt: n must be positive");
  if (static_cast<int>(splits.size()) != n - 1)
    throw std::invalid_argument("solve_leaves_fpt: need exactly n-1 splits");
  Instance instance;
  instance.weights.assign(n, 1);
  instance.splits = splits;
  Verdict pre = precheck(instance);
  if (!pre.ok) {
    std::string msg = "solve_leaves_fpt: rejected input";
    for (const auto& why : pre.violations) msg += "; " + why;
    throw std::invalid_argument(msg);
  }

  if (n == 1) {
    WeightedTree t;
    t.n = 1;
    t.weight = {1};
    return std::make_pair(t, SplitAssignment{});
  }
  if (n == 2) {
    WeightedTree t;
    t.n = 2;
    t.weight = {1, 1};
    t.edges = {make_edge(0, 1)};
    return std::make_pair(t, compute_splits(t));
  }
  if (leaf_count(splits) < 2) return std::nullopt;  // every tree on n >= 2 has 2 leaves

  return search(initial_grow_state(splits, n), sorted(splits));
}

}  // namespace splits
