#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "splits/reductions.hpp"

namespace splits {

struct ParseError : std::runtime_error {
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct ParsedObject {
  enum Kind { Wsr, Scd, Nmts, Dnmts, Tree, Sched, Splits } kind;
  Instance instance;            // Wsr
  ScdInstance scd;              // Scd
  NmtsInstance nmts;            // Nmts / Dnmts
  WeightedTree tree;            // Tree
  SplitAssignment tree_splits;  // Tree
  Schedule schedule;            // Sched
  std::vector<Value> splits;    // Splits
};

ParsedObject parse_instance(const std::string& text);

std::string emit_instance(const Instance& instance);
std::string emit_scd(const ScdInstance& scd);
std::string emit_nmts(const NmtsInstance& nmts);
std::string emit_tree(const WeightedTree& tree, const SplitAssignment& assignment);
std::string emit_schedule(const Schedule& schedule);
std::string emit_splits(const std::vector<Value>& splits);

// Deterministic in (distinct, m, max_value, seed, solvable). With solvable,
// the S values are sums of a sampled perfect matching; otherwise two S values
// trade a random amount, which keeps the balance invariant but usually breaks
// solvability.
NmtsInstance gen_nmts(bool distinct, int m, Value max_value, std::uint64_t seed, bool solvable);

// Brute-force matching finder for small m; pairs are 1-based (a index, b index)
// listed per target value.
std::optional<std::vector<std::pair<int, int>>> find_matching(const NmtsInstance& nmts);

}  // namespace splits
