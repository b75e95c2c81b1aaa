#include "culab/step_function.hpp"

#include <algorithm>

#include "culab/errors.hpp"

namespace culab {

StepFunction::StepFunction(std::vector<Rat> breakpoints,
                           std::vector<ExtendedNat> interval_values,
                           std::vector<ExtendedNat> point_values)
    : breakpoints_(std::move(breakpoints)),
      interval_values_(std::move(interval_values)),
      point_values_(std::move(point_values)) {
  if (breakpoints_.size() < 2) throw SchemaError("need at least breakpoints {0, 1}");
  if (breakpoints_.front() != 0 || breakpoints_.back() != 1) {
    throw SchemaError("breakpoints must start at 0 and end at 1");
  }
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!(breakpoints_[i - 1] < breakpoints_[i])) {
      throw SchemaError("breakpoints must be strictly increasing");
    }
  }
  if (interval_values_.size() + 1 != breakpoints_.size()) {
    throw SchemaError("interval_values size must be #breakpoints - 1");
  }
  if (point_values_.size() != breakpoints_.size()) {
    throw SchemaError("point_values size must equal #breakpoints");
  }
}

StepFunction StepFunction::constant(ExtendedNat value) {
  return StepFunction({Rat(0), Rat(1)}, {value}, {value, value});
}

ExtendedNat StepFunction::eval(const Rat& t) const {
  if (t < 0 || t > 1) throw PreconditionError("OutOfDomain", "eval outside [0,1]");
  auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (it != breakpoints_.end() && *it == t) return point_values_[idx];
  return interval_values_[idx - 1];
}

ExtendedNat StepFunction::max_value() const {
  ExtendedNat m = point_values_.front();
  for (const auto& v : point_values_) m = max(m, v);
  for (const auto& v : interval_values_) m = max(m, v);
  return m;
}

std::vector<Rat> merge_breakpoints(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> merged;
  merged.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

StepFunction StepFunction::refined_to(const std::vector<Rat>& superset) const {
  std::vector<ExtendedNat> iv;
  std::vector<ExtendedNat> pv;
  iv.reserve(superset.size() - 1);
  pv.reserve(superset.size());
  std::size_t old = 0;  // index of the old breakpoint at or before the cursor
  for (std::size_t j = 0; j < superset.size(); ++j) {
    const Rat& s = superset[j];
    while (old + 1 < breakpoints_.size() && breakpoints_[old + 1] <= s) ++old;
    if (breakpoints_[old] == s) {
      pv.push_back(point_values_[old]);
    } else {
      pv.push_back(interval_values_[old]);  // s interior to (t_old, t_old+1)
    }
    if (j + 1 < superset.size()) {
      // (s, superset[j+1]) contains no old breakpoint, so it sits inside
      // the old interval that starts at index `old`.
      iv.push_back(interval_values_[old]);
    }
  }
  return StepFunction(superset, std::move(iv), std::move(pv));
}

StepFunction StepFunction::canonicalized() const {
  std::vector<Rat> bps{breakpoints_.front()};
  std::vector<ExtendedNat> iv{interval_values_.front()};
  std::vector<ExtendedNat> pv{point_values_.front()};
  for (std::size_t i = 1; i + 1 < breakpoints_.size(); ++i) {
    const bool removable =
        interval_values_[i - 1] == interval_values_[i] && point_values_[i] == interval_values_[i];
    if (removable) continue;
    bps.push_back(breakpoints_[i]);
    pv.push_back(point_values_[i]);
    iv.push_back(interval_values_[i]);
  }
  // A removable breakpoint merges its two intervals: the surviving interval
  // value is the shared one, which `iv` already carries.
  bps.push_back(breakpoints_.back());
  pv.push_back(point_values_.back());
  return StepFunction(std::move(bps), std::move(iv), std::move(pv));
}

std::pair<StepFunction, StepFunction> StepFunction::refine_pair(const StepFunction& f,
                                                                const StepFunction& g) {
  std::vector<Rat> merged = merge_breakpoints(f.breakpoints_, g.breakpoints_);
  return {f.refined_to(merged), g.refined_to(merged)};
}

}  // namespace culab
