#pragma once

#include <map>
#include <optional>

#include "splits/core.hpp"

namespace splits {

// Branch-and-backtrack reconstruction of unit-weight trees, parameterized by
// the number of leaves (= number of splits equal to 1). The search grows
// subtrees hanging off a root of shrinking residual weight; every split value
// is at all times either available, attached to a root edge, or used up
// inside a finished subtree.

int leaf_count(const std::vector<Value>& splits);

struct GrowState {
  int n = 0;
  Value root_weight = 0;  // units not yet placed, plus the root itself

  struct Child {
    Value split;  // subtree weight hanging on this root edge
    int root;     // vertex id of the subtree's top vertex
  };
  std::vector<Child> children;
  std::vector<Edge> internal_edges;  // edges not incident to the root
  int placed = 0;                    // unit vertices created so far (ids 1..placed)

  std::map<Value, int> available;  // multiset A as value -> count
  std::map<Value, int> used;       // multiset U
};

GrowState initial_grow_state(const std::vector<Value>& splits, int n);

struct GrowOutcome {
  enum Kind { Accept, Reject, Forced, Branch } kind;
  std::vector<GrowState> next;  // one state for Forced, candidates for Branch
};

// One transition of the search, classifying the state by the case analysis:
// accept at root weight 1; reject when A undercuts or overfills the b-edges;
// forced subdivision on exact balance; otherwise branch over groupings.
GrowOutcome grow_step(const GrowState& state);

std::optional<std::pair<WeightedTree, SplitAssignment>> solve_leaves_fpt(
    const std::vector<Value>& splits, int n);

}  // namespace splits
