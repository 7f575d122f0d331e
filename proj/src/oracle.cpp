#include "splits/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "splits/reductions.hpp"

namespace splits {

WeightedTree prufer_decode(const std::vector<int>& seq, int n) {
  if (n < 2) throw std::invalid_argument("prufer_decode: n must be at least 2");
  if (static_cast<int>(seq.size()) != n - 2)
    throw std::invalid_argument("prufer_decode: sequence length must be n-2");
  for (int x : seq)
    if (x < 0 || x >= n) throw std::invalid_argument("prufer_decode: entry out of range");

  WeightedTree tree;
  tree.n = n;
  tree.weight.assign(n, 1);
  std::vector<int> degree(n, 1);
  for (int x : seq) ++degree[x];
  // Smallest-leaf-first decoding with a moving pointer.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    tree.edges.push_back(make_edge(leaf, x));
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (ptr < n && degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  tree.edges.push_back(make_edge(leaf, n - 1));
  return tree;
}

TreeStream::TreeStream(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: n must be positive");
  if (n >= 3) seq_.assign(n - 2, 0);
}

std::optional<WeightedTree> TreeStream::next() {
  if (done_) return std::nullopt;
  if (n_ == 1) {
    done_ = true;
    WeightedTree t;
    t.n = 1;
    t.weight = {1};
    return t;
  }
  WeightedTree t = prufer_decode(seq_, n_);
  // Advance the sequence like a base-n counter.
  done_ = true;
  for (int i = n_ - 3; i >= 0; --i) {
    if (++seq_[i] < n_) {
      done_ = false;
      break;
    }
    seq_[i] = 0;
  }
  if (n_ == 2) done_ = true;
  return t;
}

std::optional<std::pair<WeightedTree, SplitAssignment>> solve_exact(const Instance& instance,
                                                                    int cap) {
  int n = static_cast<int>(instance.weights.size());
  if (n > cap)
    throw CapExceeded("solve_exact: " + std::to_string(n) + " weights exceed cap " +
                      std::to_string(cap));
  if (n == 0) return std::nullopt;
  TreeStream stream(n);
  while (auto tree = stream.next()) {
    std::vector<Value> assignment = sorted(instance.weights);
    do {
      tree->weight = assignment;
      Verdict v = validate(instance, *tree);
      if (v.ok) return std::make_pair(*tree, compute_splits(*tree));
    } while (std::next_permutation(assignment.begin(), assignment.end()));
  }
  return std::nullopt;
}

std::vector<Value> path_edge_splits(const std::vector<Value>& ordering) {
  Value total = 0;
  for (Value w : ordering) total = checked_add(total, w);
  std::vector<Value> out;
  Value prefix = 0;
  for (size_t i = 0; i + 1 < ordering.size(); ++i) {
    prefix = checked_add(prefix, ordering[i]);
    out.push_back(std::min(prefix, total - prefix));
  }
  return out;
}

std::optional<PathSolution> solve_exact_path(const Instance& instance, int cap) {
  int n = static_cast<int>(instance.weights.size());
  if (n > cap)
    throw CapExceeded("solve_exact_path: " + std::to_string(n) + " weights exceed cap " +
                      std::to_string(cap));
  if (instance.splits.size() + 1 != instance.weights.size()) return std::nullopt;
  std::vector<Value> want = sorted(instance.splits);
  std::vector<Value> ordering = sorted(instance.weights);
  if (n == 0) return std::nullopt;
  do {
    if (sorted(path_edge_splits(ordering)) == want)
      return PathSolution{ordering, path_edge_splits(ordering)};
  } while (std::next_permutation(ordering.begin(), ordering.end()));
  return std::nullopt;
}

std::optional<Schedule> solve_exact_scd(const ScdInstance& scd, int cap) {
  int n = static_cast<int>(scd.jobs.size());
  if (n > cap)
    throw CapExceeded("solve_exact_scd: " + std::to_string(n) + " jobs exceed cap " +
                      std::to_string(cap));
  if (scd.jobs.size() != scd.deadlines.size()) return std::nullopt;
  if (n == 0) return Schedule{};
  // Every (processor assignment, per-processor order) pair appears as some
  // permutation split at some cut point.
  std::vector<Value> perm = sorted(scd.jobs);
  do {
    for (int cut = 0; cut <= n; ++cut) {
      Schedule s;
      s.p1.assign(perm.begin(), perm.begin() + cut);
      s.p2.assign(perm.begin() + cut, perm.end());
      if (verify_schedule(scd, s).ok) return s;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace splits
