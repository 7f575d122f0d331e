#include "splits/chwsr.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace splits {

ChainDecomposition chain_decompose(const std::vector<Value>& splits) {
  if (splits.empty()) throw std::invalid_argument("chain_decompose: empty multiset");
  std::map<Value, int> counts;
  for (Value s : splits) {
    if (s < 1) throw std::invalid_argument("chain_decompose: values must be positive");
    ++counts[s];
  }
  ChainDecomposition d;
  for (const auto& [v, c] : counts) d.kappa = std::max(d.kappa, c);
  d.chains.resize(d.kappa);
  for (const auto& [v, c] : counts)
    for (int j = 0; j < c; ++j) d.chains[j].push_back(v);
  return d;
}

std::pair<WeightedTree, SplitAssignment> realize_chwsr(const std::vector<Value>& splits) {
  ChainDecomposition d = chain_decompose(splits);
  Value maxval = 0;
  for (Value s : splits) maxval = std::max(maxval, s);

  WeightedTree tree;
  tree.weight.push_back(maxval);  // root
  for (const auto& chain : d.chains) {
    // Spoke from the root, one vertex per chain element, largest innermost.
    int prev = 0;
    for (size_t i = chain.size(); i-- > 0;) {
      int v = static_cast<int>(tree.weight.size());
      tree.weight.push_back(i == 0 ? chain[0] : chain[i] - chain[i - 1]);
      tree.edges.push_back(make_edge(prev, v));
      prev = v;
    }
  }
  tree.n = static_cast<int>(tree.weight.size());

  SplitAssignment assignment = compute_splits(tree);
  if (split_multiset(tree) != sorted(splits))
    throw std::logic_error("realize_chwsr: construction does not reproduce the multiset");
  return {std::move(tree), std::move(assignment)};
}

Value ones_threshold(const std::vector<Value>& splits_without_ones) {
  if (splits_without_ones.empty()) return 0;
  for (Value s : splits_without_ones)
    if (s == 1) throw std::domain_error("ones_threshold: input must not contain 1");
  ChainDecomposition d = chain_decompose(splits_without_ones);
  Value maxval = *std::max_element(splits_without_ones.begin(), splits_without_ones.end());
  Value t = d.kappa;
  for (const auto& chain : d.chains) {
    Value prev = 0;
    for (Value s : chain) {
      t = checked_add(t, s - prev - 1);
      prev = s;
    }
    t -= chain.back();
  }
  return checked_add(t, 2 * maxval - 1);
}

std::optional<std::pair<WeightedTree, SplitAssignment>> realize_sr_unit(
    const std::vector<Value>& splits) {
  Value t = 0;
  std::vector<Value> rest;
  for (Value s : splits) {
    if (s < 1) throw std::invalid_argument("realize_sr_unit: values must be positive");
    if (s == 1)
      ++t;
    else
      rest.push_back(s);
  }

  WeightedTree tree;
  auto fresh = [&] {
    tree.weight.push_back(1);
    return static_cast<int>(tree.weight.size()) - 1;
  };
  int center = fresh();

  if (rest.empty()) {
    for (Value i = 0; i < t; ++i) tree.edges.push_back(make_edge(center, fresh()));
  } else {
    if (t < ones_threshold(rest)) return std::nullopt;
    ChainDecomposition d = chain_decompose(rest);
    Value center_pendants = t;
    for (const auto& chain : d.chains)
      center_pendants -= chain.back() - static_cast<Value>(chain.size());
    if (center_pendants < 0) return std::nullopt;  // padding does not balance

    for (const auto& chain : d.chains) {
      int prev = center;
      for (size_t i = chain.size(); i-- > 0;) {
        int v = fresh();
        tree.edges.push_back(make_edge(prev, v));
        prev = v;
        // pad this spine vertex so the subtree below the edge weighs chain[i]
        Value gap = chain[i] - (i == 0 ? 0 : chain[i - 1]) - 1;
        for (Value g = 0; g < gap; ++g) tree.edges.push_back(make_edge(v, fresh()));
      }
    }
    for (Value i = 0; i < center_pendants; ++i) tree.edges.push_back(make_edge(center, fresh()));
  }
  tree.n = static_cast<int>(tree.weight.size());

  if (tree.n > 1 && split_multiset(tree) != sorted(splits))
    throw std::logic_error("realize_sr_unit: construction does not reproduce the multiset");
  return std::make_pair(tree, tree.n > 1 ? compute_splits(tree) : SplitAssignment{});
}

}  // namespace splits
