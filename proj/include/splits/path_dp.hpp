#pragma once

#include <optional>

#include "splits/core.hpp"
#include "splits/oracle.hpp"

namespace splits {

// Dynamic program for path-shaped instances. Splits are placed sorted
// ascending, alternating freely between the two ends of the path; a table
// entry records whether the first p splits can occupy the p outermost edges
// with given innermost ("boundary") split values on each side.

struct DpKey {
  int p = 0;            // number of splits placed
  Value wl = 0;         // innermost placed split value on the left, 0 if none
  Value wr = 0;         // same on the right
  std::vector<int> used;  // usage count per distinct weight, ascending value order
};

class PathDpTable {
 public:
  explicit PathDpTable(const Instance& instance);

  bool reachable(const DpKey& key) const;

  struct Stats {
    size_t entries = 0;       // allocated table cells
    size_t true_entries = 0;  // cells marked reachable
  };
  Stats stats() const { return stats_; }

  const std::vector<Value>& distinct_weights() const { return weights_; }
  const std::vector<int>& multiplicities() const { return mult_; }

  std::optional<PathSolution> extract() const;

 private:
  size_t index(int p, int li, int ri, size_t ui) const;
  int boundary_index(Value v) const;  // -1 if v is not 0 or a split value

  std::vector<Value> weights_;  // distinct, ascending
  std::vector<int> mult_;
  std::vector<Value> splits_;    // sorted ascending
  std::vector<Value> boundary_;  // {0} union distinct split values
  std::vector<size_t> radix_;    // mixed-radix strides for the usage vector
  size_t usage_states_ = 1;
  std::vector<char> table_;
  Stats stats_;
  Value total_ = 0;
};

int count_distinct_weights(const Instance& instance);

// Table predicate, exposed for testing.
bool dp_reachable(const Instance& instance, const DpKey& key);

// Throws std::invalid_argument with the verdict text when precheck fails.
std::optional<PathSolution> solve_path_dp(const Instance& instance);

}  // namespace splits
