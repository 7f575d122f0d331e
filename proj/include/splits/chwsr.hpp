#pragma once

#include <optional>

#include "splits/core.hpp"

namespace splits {

// Constructive realizers: with freely choosable vertex weights every split
// multiset comes from a tree (a subdivided star), and with unit weights the
// same skeleton works once enough 1-splits are present to pad it out.

struct ChainDecomposition {
  std::vector<std::vector<Value>> chains;  // each strictly increasing
  int kappa = 0;                           // = max multiplicity in the input
};

// Greedy: the j-th copy of each value goes to chain j.
ChainDecomposition chain_decompose(const std::vector<Value>& splits);

std::pair<WeightedTree, SplitAssignment> realize_chwsr(const std::vector<Value>& splits);

// Number of 1-splits that make the unit-weight construction below go through
// for a multiset without 1s. Sufficient, not necessary.
Value ones_threshold(const std::vector<Value>& splits_without_ones);

// Unit-weight realization, or nullopt when the sufficient condition (enough
// 1-splits to pad every vertex of the weighted skeleton) does not hold.
// nullopt is not a proof of infeasibility.
std::optional<std::pair<WeightedTree, SplitAssignment>> realize_sr_unit(
    const std::vector<Value>& splits);

}  // namespace splits
