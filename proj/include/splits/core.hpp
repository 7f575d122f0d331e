#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace splits {

// All weights and splits are positive integers. Sums of weights and products
// like s*(n-s) are computed through checked_* helpers, which widen to 128 bits
// and throw on anything that cannot be represented in 64 bits.
using Value = long long;

using Edge = std::pair<int, int>;  // stored normalized, first < second

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

struct OverflowError : std::exception {
  const char* what() const noexcept override { return "integer overflow in weight arithmetic"; }
};

Value checked_add(Value a, Value b);
Value checked_mul(Value a, Value b);

enum class Shape { any, path, caterpillar };

struct Instance {
  std::vector<Value> weights;  // one per vertex
  std::vector<Value> splits;   // one per edge of any solution
  Shape shape = Shape::any;
  std::optional<int> max_degree;
};

struct WeightedTree {
  int n = 0;
  std::vector<Value> weight;  // indexed by vertex id 0..n-1
  std::vector<Edge> edges;    // exactly n-1 for a well-formed tree
};

struct SplitAssignment {
  std::map<Edge, Value> value;
};

struct Verdict {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
};

// Multisets are represented as sorted vectors throughout.
std::vector<Value> sorted(std::vector<Value> v);

Value total_weight(const WeightedTree& tree);

// True iff the edge set forms a single tree on tree.n vertices.
bool is_tree(const WeightedTree& tree);

int max_degree_of(const WeightedTree& tree);
bool is_path(const WeightedTree& tree);

// Caterpillar in the unbounded-hair sense: there is a backbone path such that
// every vertex off the backbone has degree at most 2.
bool is_caterpillar(const WeightedTree& tree);

// Split of every edge: min of the two component weight sums (one rooted
// traversal from vertex 0).
SplitAssignment compute_splits(const WeightedTree& tree);

// Multiset view of compute_splits, sorted.
std::vector<Value> split_multiset(const WeightedTree& tree);

// Sum over s*(n-s); the unit-weight Wiener identity.
Value wiener_from_splits(const std::vector<Value>& splits, Value n);

// Exact pairwise distance sum by BFS from every vertex; unit weights only.
Value wiener_by_distances(const WeightedTree& tree);

Verdict validate(const Instance& instance, const WeightedTree& tree);

// Necessary-condition filter: count mismatch and splits above floor(W/2).
// Passing says nothing about feasibility.
Verdict precheck(const Instance& instance);

}  // namespace splits
