#pragma once

#include <optional>

#include "splits/core.hpp"

namespace splits {

// Ground-truth solvers by exhaustive enumeration. Deliberately free of any
// pruning that would change their asymptotics; correctness of everything
// cleverer in this library is measured against them.

struct CapExceeded : std::exception {
  explicit CapExceeded(std::string what) : what_(std::move(what)) {}
  const char* what() const noexcept override { return what_.c_str(); }
  std::string what_;
};

// Standard Prufer decoding; unit weights.
WeightedTree prufer_decode(const std::vector<int>& seq, int n);

// Cursor over all n^(n-2) labeled trees in lexicographic Prufer order.
class TreeStream {
 public:
  explicit TreeStream(int n);
  std::optional<WeightedTree> next();

 private:
  int n_;
  bool done_ = false;
  std::vector<int> seq_;
};

inline TreeStream enumerate_trees(int n) { return TreeStream(n); }

struct ScdInstance {
  std::vector<Value> jobs;       // multiset of lengths
  std::vector<Value> deadlines;  // sorted ascending, |deadlines| == |jobs|
};

struct Schedule {
  std::vector<Value> p1;  // job lengths in execution order, dense from 0
  std::vector<Value> p2;
};

struct PathSolution {
  std::vector<Value> ordering;     // weights left to right
  std::vector<Value> edge_splits;  // n-1 splits along the path
};

// First tree in canonical (Prufer-lex, then weight-assignment-lex) order that
// validates against the instance. Empty if none.
std::optional<std::pair<WeightedTree, SplitAssignment>> solve_exact(const Instance& instance,
                                                                    int cap = 9);

// Lexicographically least ordering of the weight multiset whose path splits
// reproduce the instance's split multiset. Empty if none.
std::optional<PathSolution> solve_exact_path(const Instance& instance, int cap = 10);

std::optional<Schedule> solve_exact_scd(const ScdInstance& scd, int cap = 10);

// Splits of the path carrying `ordering` as vertex weights, in edge order.
std::vector<Value> path_edge_splits(const std::vector<Value>& ordering);

}  // namespace splits
