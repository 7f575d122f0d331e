#pragma once

#include "splits/core.hpp"
#include "splits/oracle.hpp"

namespace splits {

// The hardness reductions, packaged as instance generators plus forward
// witness builders. Every generator asserts the arithmetic identities of its
// construction and throws on violation rather than emitting a bad instance.

struct NmtsInstance {
  std::vector<Value> a, b, s;  // sorted ascending, |a| == |b| == |s|
  bool distinct_required = false;

  int m() const { return static_cast<int>(a.size()); }
};

// Throws unless sorted, balanced (sum s == sum a + sum b), a_m < b_m,
// s_m <= a_m + b_m, and (in distinct mode) all 3m values pairwise distinct.
NmtsInstance make_nmts(std::vector<Value> a, std::vector<Value> b, std::vector<Value> s,
                       bool distinct_required);

struct BlowupTriple {
  std::vector<Value> x, y, z;  // n = m+1 even values each, strictly increasing
};

struct ReductionTrace {
  std::string kind;
  bool early_no = false;     // scd_to_wsr2 shortcut when job sums cannot meet
  Verdict verdict;           // diagnostics accompanying early_no
  ScdInstance scd;           // source kept for schedule_to_path / path_to_schedule
  BlowupTriple blowup;       // dnmts_to_scd intermediate values
  Value omega = 0;           // wsr2_to_caterpillar blow-up constant
  Value scale = 0;           // wsr2_to_caterpillar multiplier (n * omega)
  std::vector<Value> block_weights;  // caterpillar: expanded weight per block
  std::vector<Value> sr3_a, sr3_b, sr3_s;  // shifted NMTS values behind an SR3 instance
  Value sr3_n = 0;
};

Verdict verify_schedule(const ScdInstance& scd, const Schedule& schedule);

// Job lengths become weights, deadlines minus the largest become splits.
std::pair<Instance, ReductionTrace> scd_to_wsr2(const ScdInstance& scd);

// P1's jobs in order, then P2's reversed. Requires a verifying schedule.
PathSolution schedule_to_path(const Schedule& schedule, const ReductionTrace& trace);

// Cut the validated path at the edge carrying the second-largest deadline.
Schedule path_to_schedule(const PathSolution& path, const ReductionTrace& trace);

BlowupTriple dnmts_blowup(const NmtsInstance& src);

std::pair<ScdInstance, ReductionTrace> dnmts_to_scd(const NmtsInstance& src);

// matching[j] = (x index, y index), 1-based, one per segment, with
// x + y == z_{j+1}. Builds the canonical per-segment layout.
Schedule dnmts_solution_to_schedule(const std::vector<std::pair<int, int>>& matching,
                                    const ScdInstance& scd, const ReductionTrace& trace);

std::pair<Instance, ReductionTrace> nmts_to_sr3(const NmtsInstance& src);

// matching[i] = (a index, b index), 1-based, with a + b == s_{i+1} in the
// shifted instance recorded in the trace.
std::pair<WeightedTree, SplitAssignment> nmts_solution_to_tree(
    const std::vector<std::pair<int, int>>& matching, const Instance& sr3_instance,
    const ReductionTrace& trace);

// Path-shaped source with n-2 weights and n-3 splits becomes a unit-weight
// caterpillar instance with max degree 3.
std::pair<Instance, ReductionTrace> wsr2_to_caterpillar(const Instance& src);

}  // namespace splits
