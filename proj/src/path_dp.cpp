#include "splits/path_dp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace splits {

int count_distinct_weights(const Instance& instance) {
  return static_cast<int>(
      std::set<Value>(instance.weights.begin(), instance.weights.end()).size());
}

PathDpTable::PathDpTable(const Instance& instance) {
  Verdict pre = precheck(instance);
  if (!pre.ok) {
    std::string msg = "solve_path_dp: rejected input";
    for (const auto& why : pre.violations) msg += "; " + why;
    throw std::invalid_argument(msg);
  }

  std::map<Value, int> by_weight;
  for (Value w : instance.weights) ++by_weight[w];
  for (const auto& [w, m] : by_weight) {
    weights_.push_back(w);
    mult_.push_back(m);
  }
  splits_ = sorted(instance.splits);
  total_ = 0;
  for (Value w : instance.weights) total_ = checked_add(total_, w);

  boundary_.push_back(0);
  for (Value s : splits_)
    if (s != boundary_.back()) boundary_.push_back(s);

  radix_.assign(mult_.size(), 0);
  for (size_t i = 0; i < mult_.size(); ++i) {
    radix_[i] = usage_states_;
    usage_states_ *= mult_[i] + 1;
  }

  size_t bsz = boundary_.size();
  int placements = static_cast<int>(splits_.size());
  table_.assign(static_cast<size_t>(placements + 1) * bsz * bsz * usage_states_, false);
  stats_.entries = table_.size();

  table_[index(0, 0, 0, 0)] = true;
  stats_.true_entries = 1;

  std::vector<int> used(mult_.size(), 0);
  for (int p = 0; p < placements; ++p) {
    Value s = splits_[p];
    int si = boundary_index(s);
    std::fill(used.begin(), used.end(), 0);
    for (size_t ui = 0; ui < usage_states_; ++ui) {
      for (size_t li = 0; li < bsz; ++li)
        for (size_t ri = 0; ri < bsz; ++ri) {
          if (!table_[index(p, static_cast<int>(li), static_cast<int>(ri), ui)]) continue;
          for (size_t i = 0; i < weights_.size(); ++i) {
            if (used[i] >= mult_[i]) continue;
            size_t nui = ui + radix_[i];
            // The p-th smallest split lands at the new innermost edge of one
            // side, so its value must be that side's extended prefix sum.
            if (boundary_[li] + weights_[i] == s) {
              size_t idx = index(p + 1, si, static_cast<int>(ri), nui);
              if (!table_[idx]) {
                table_[idx] = true;
                ++stats_.true_entries;
              }
            }
            if (boundary_[ri] + weights_[i] == s) {
              size_t idx = index(p + 1, static_cast<int>(li), si, nui);
              if (!table_[idx]) {
                table_[idx] = true;
                ++stats_.true_entries;
              }
            }
          }
        }
      // advance the usage odometer to stay in sync with ui
      for (size_t i = 0; i < used.size(); ++i) {
        if (++used[i] <= mult_[i]) break;
        used[i] = 0;
      }
    }
  }
}

size_t PathDpTable::index(int p, int li, int ri, size_t ui) const {
  size_t bsz = boundary_.size();
  return ((static_cast<size_t>(p) * bsz + li) * bsz + ri) * usage_states_ + ui;
}

int PathDpTable::boundary_index(Value v) const {
  auto it = std::lower_bound(boundary_.begin(), boundary_.end(), v);
  if (it == boundary_.end() || *it != v) return -1;
  return static_cast<int>(it - boundary_.begin());
}

bool PathDpTable::reachable(const DpKey& key) const {
  if (key.p < 0 || key.p > static_cast<int>(splits_.size())) return false;
  if (key.used.size() != mult_.size()) return false;
  int li = boundary_index(key.wl), ri = boundary_index(key.wr);
  if (li < 0 || ri < 0) return false;
  size_t ui = 0;
  for (size_t i = 0; i < mult_.size(); ++i) {
    if (key.used[i] < 0 || key.used[i] > mult_[i]) return false;
    ui += radix_[i] * key.used[i];
  }
  return table_[index(key.p, li, ri, ui)];
}

std::optional<PathSolution> PathDpTable::extract() const {
  int placements = static_cast<int>(splits_.size());
  size_t bsz = boundary_.size();
  size_t full = 0;
  for (size_t i = 0; i < mult_.size(); ++i) full += radix_[i] * mult_[i];

  for (size_t pivot = 0; pivot < weights_.size(); ++pivot) {
    size_t ui = full - radix_[pivot];
    Value w = weights_[pivot];
    for (size_t li = 0; li < bsz; ++li)
      for (size_t ri = 0; ri < bsz; ++ri) {
        Value wl = boundary_[li], wr = boundary_[ri];
        if (wl > w + wr || wr > w + wl) continue;  // pivot vertex consistency
        if (!table_[index(placements, static_cast<int>(li), static_cast<int>(ri), ui)]) continue;

        // Walk the table backwards, re-deriving one predecessor per step.
        std::vector<int> counts(mult_);
        counts[pivot] -= 1;
        std::vector<Value> left, right;
        int cl = static_cast<int>(li), cr = static_cast<int>(ri);
        size_t cu = ui;
        for (int p = placements; p > 0; --p) {
          Value s = splits_[p - 1];
          bool stepped = false;
          for (int side = 0; side < 2 && !stepped; ++side) {
            int cb = side == 0 ? cl : cr;
            if (boundary_[cb] != s) continue;
            for (size_t i = 0; i < weights_.size() && !stepped; ++i) {
              if (counts[i] == 0) continue;
              int prev = boundary_index(s - weights_[i]);
              if (prev < 0) continue;
              size_t pu = cu - radix_[i];
              int pl = side == 0 ? prev : cl;
              int pr = side == 0 ? cr : prev;
              if (!table_[index(p - 1, pl, pr, pu)]) continue;
              (side == 0 ? left : right).push_back(weights_[i]);
              --counts[i];
              cl = pl;
              cr = pr;
              cu = pu;
              stepped = true;
            }
          }
          if (!stepped) throw std::logic_error("path dp: reachable entry has no predecessor");
        }
        PathSolution sol;
        sol.ordering.assign(left.rbegin(), left.rend());  // collected innermost-first
        sol.ordering.push_back(w);
        sol.ordering.insert(sol.ordering.end(), right.begin(), right.end());
        sol.edge_splits = path_edge_splits(sol.ordering);
        return sol;
      }
  }
  return std::nullopt;
}

bool dp_reachable(const Instance& instance, const DpKey& key) {
  return PathDpTable(instance).reachable(key);
}

std::optional<PathSolution> solve_path_dp(const Instance& instance) {
  if (instance.splits.size() + 1 != instance.weights.size())
    throw std::invalid_argument("solve_path_dp: need exactly one split less than weights");
  return PathDpTable(instance).extract();
}

}  // namespace splits
