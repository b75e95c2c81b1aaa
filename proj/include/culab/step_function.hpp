#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "culab/extended.hpp"
#include "culab/rational.hpp"

namespace culab {

// Piecewise-constant data on [0,1] with explicit point values.
//
// breakpoints: 0 = t_0 < t_1 < ... < t_m = 1 (rationals)
// interval_values[i]: value on the open interval (t_i, t_{i+1})
// point_values[i]:    value at t_i
//
// No semicontinuity is imposed at this layer; RankFunction adds the lower
// semicontinuity invariant and usc envelopes live here directly.
class StepFunction {
 public:
  StepFunction(std::vector<Rat> breakpoints, std::vector<ExtendedNat> interval_values,
               std::vector<ExtendedNat> point_values);

  static StepFunction constant(ExtendedNat value);

  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<ExtendedNat>& interval_values() const { return interval_values_; }
  const std::vector<ExtendedNat>& point_values() const { return point_values_; }
  std::size_t piece_count() const { return interval_values_.size(); }

  ExtendedNat eval(const Rat& t) const;

  ExtendedNat max_value() const;
  bool is_bounded() const { return !max_value().is_infinite(); }

  // Re-expresses the same function over a breakpoint superset.
  StepFunction refined_to(const std::vector<Rat>& superset) const;

  // Drops interior breakpoints carrying no information (both adjacent
  // interval values and the point value coincide).
  StepFunction canonicalized() const;

  // Common refinement of two functions onto merged breakpoints.
  static std::pair<StepFunction, StepFunction> refine_pair(const StepFunction& f,
                                                           const StepFunction& g);

  friend bool operator==(const StepFunction& a, const StepFunction& b) {
    return a.breakpoints_ == b.breakpoints_ && a.interval_values_ == b.interval_values_ &&
           a.point_values_ == b.point_values_;
  }

 private:
  std::vector<Rat> breakpoints_;
  std::vector<ExtendedNat> interval_values_;
  std::vector<ExtendedNat> point_values_;
};

std::vector<Rat> merge_breakpoints(const std::vector<Rat>& a, const std::vector<Rat>& b);

}  // namespace culab
