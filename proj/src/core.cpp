#include "splits/core.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace splits {

Value checked_add(Value a, Value b) {
  __int128 r = static_cast<__int128>(a) + b;
  if (r > std::numeric_limits<Value>::max() || r < std::numeric_limits<Value>::min())
    throw OverflowError{};
  return static_cast<Value>(r);
}

Value checked_mul(Value a, Value b) {
  __int128 r = static_cast<__int128>(a) * b;
  if (r > std::numeric_limits<Value>::max() || r < std::numeric_limits<Value>::min())
    throw OverflowError{};
  return static_cast<Value>(r);
}

std::vector<Value> sorted(std::vector<Value> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Value total_weight(const WeightedTree& tree) {
  Value w = 0;
  for (Value x : tree.weight) w = checked_add(w, x);
  return w;
}

namespace {

std::vector<std::vector<int>> adjacency(const WeightedTree& tree) {
  std::vector<std::vector<int>> adj(tree.n);
  for (const auto& [u, v] : tree.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

}  // namespace

bool is_tree(const WeightedTree& tree) {
  if (tree.n <= 0) return false;
  if (static_cast<int>(tree.weight.size()) != tree.n) return false;
  if (static_cast<int>(tree.edges.size()) != tree.n - 1) return false;
  for (const auto& [u, v] : tree.edges)
    if (u < 0 || v < 0 || u >= tree.n || v >= tree.n || u == v) return false;
  // n-1 edges + connected => acyclic.
  auto adj = adjacency(tree);
  std::vector<char> seen(tree.n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        queue.push_back(v);
      }
  }
  return reached == tree.n;
}

int max_degree_of(const WeightedTree& tree) {
  std::vector<int> deg(tree.n, 0);
  for (const auto& [u, v] : tree.edges) {
    ++deg[u];
    ++deg[v];
  }
  return tree.n == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
}

bool is_path(const WeightedTree& tree) { return max_degree_of(tree) <= 2; }

bool is_caterpillar(const WeightedTree& tree) {
  // A tree is a caterpillar iff deleting every leaf yields a path (or nothing).
  std::vector<int> deg(tree.n, 0);
  for (const auto& [u, v] : tree.edges) {
    ++deg[u];
    ++deg[v];
  }
  std::vector<int> inner_deg(tree.n, 0);
  for (const auto& [u, v] : tree.edges)
    if (deg[u] > 1 && deg[v] > 1) {
      ++inner_deg[u];
      ++inner_deg[v];
    }
  for (int v = 0; v < tree.n; ++v)
    if (deg[v] > 1 && inner_deg[v] > 2) return false;
  return true;
}

SplitAssignment compute_splits(const WeightedTree& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("compute_splits: malformed tree");
  Value total = total_weight(tree);
  auto adj = adjacency(tree);

  // Iterative rooted traversal from vertex 0; subtree sums on the way back.
  std::vector<int> parent(tree.n, -1), order;
  order.reserve(tree.n);
  std::vector<char> seen(tree.n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        parent[v] = u;
        stack.push_back(v);
      }
  }
  std::vector<Value> sub(tree.weight);
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) sub[parent[*it]] = checked_add(sub[parent[*it]], sub[*it]);

  SplitAssignment out;
  for (int v = 0; v < tree.n; ++v)
    if (parent[v] >= 0)
      out.value[make_edge(v, parent[v])] = std::min(sub[v], total - sub[v]);
  return out;
}

std::vector<Value> split_multiset(const WeightedTree& tree) {
  std::vector<Value> s;
  for (const auto& [e, v] : compute_splits(tree).value) s.push_back(v);
  return sorted(std::move(s));
}

Value wiener_from_splits(const std::vector<Value>& splits, Value n) {
  Value sum = 0;
  for (Value s : splits) sum = checked_add(sum, checked_mul(s, n - s));
  return sum;
}

Value wiener_by_distances(const WeightedTree& tree) {
  if (!is_tree(tree)) throw std::invalid_argument("wiener_by_distances: malformed tree");
  for (Value w : tree.weight)
    if (w != 1) throw std::domain_error("wiener_by_distances: unit weights required");
  auto adj = adjacency(tree);
  Value sum = 0;
  std::vector<int> dist(tree.n);
  for (int s = 0; s < tree.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    for (int v = s + 1; v < tree.n; ++v) sum = checked_add(sum, dist[v]);
  }
  return sum;
}

namespace {

std::string multiset_diff(const std::vector<Value>& got, const std::vector<Value>& want) {
  std::ostringstream os;
  os << "got {";
  for (size_t i = 0; i < got.size(); ++i) os << (i ? "," : "") << got[i];
  os << "} expected {";
  for (size_t i = 0; i < want.size(); ++i) os << (i ? "," : "") << want[i];
  os << "}";
  return os.str();
}

}  // namespace

Verdict validate(const Instance& instance, const WeightedTree& tree) {
  Verdict v;
  if (!is_tree(tree)) {
    v.fail("structure: not a tree");
    return v;
  }
  auto tw = sorted(tree.weight);
  auto iw = sorted(instance.weights);
  if (tw != iw) v.fail("weight multiset mismatch: " + multiset_diff(tw, iw));
  auto ts = split_multiset(tree);
  auto is = sorted(instance.splits);
  if (ts != is) v.fail("split multiset mismatch: " + multiset_diff(ts, is));
  if (instance.shape == Shape::path && !is_path(tree)) v.fail("shape: tree is not a path");
  if (instance.shape == Shape::caterpillar && !is_caterpillar(tree))
    v.fail("shape: tree is not a caterpillar");
  if (instance.max_degree && max_degree_of(tree) > *instance.max_degree)
    v.fail("degree: max degree " + std::to_string(max_degree_of(tree)) + " exceeds " +
           std::to_string(*instance.max_degree));
  return v;
}

Verdict precheck(const Instance& instance) {
  Verdict v;
  if (instance.splits.size() + 1 != instance.weights.size())
    v.fail("count mismatch: " + std::to_string(instance.splits.size()) + " splits for " +
           std::to_string(instance.weights.size()) + " weights");
  Value total = 0;
  for (Value w : instance.weights) {
    if (w < 1) v.fail("weight " + std::to_string(w) + " is not positive");
    total = checked_add(total, w);
  }
  for (Value s : instance.splits) {
    if (s < 1) v.fail("split " + std::to_string(s) + " is not positive");
    if (s > total / 2)
      v.fail("split " + std::to_string(s) + " exceeds floor(" + std::to_string(total) + "/2)");
  }
  if (instance.shape == Shape::path && !instance.weights.empty() && !instance.splits.empty()) {
    Value wmin = *std::min_element(instance.weights.begin(), instance.weights.end());
    Value smin = *std::min_element(instance.splits.begin(), instance.splits.end());
    if (smin < wmin)
      v.fail("split " + std::to_string(smin) + " below minimum weight " + std::to_string(wmin) +
             " cannot sit at a path end");
  }
  return v;
}

}  // namespace splits
