#pragma once

#include <cstdint>
#include <vector>

#include "culab/open_set.hpp"
#include "culab/step_function.hpp"

namespace culab {

// An element of the rank lattice Lsc([0,1], N-bar): an integer-valued lower
// semicontinuous step function with rational breakpoints, kept in canonical
// form (no removable breakpoints). Structural equality is therefore equality
// of functions.
//
// Lower semicontinuity for step data means every point value is bounded by
// the adjacent interval values.
class RankFunction {
 public:
  RankFunction(std::vector<Rat> breakpoints, std::vector<ExtendedNat> interval_values,
               std::vector<ExtendedNat> point_values);
  explicit RankFunction(StepFunction data);

  static RankFunction constant(ExtendedNat value);
  static RankFunction zero() { return constant(ExtendedNat(0)); }

  // Characteristic function of a relatively open set.
  static RankFunction indicator(const OpenSet1D& support);

  const StepFunction& step() const { return data_; }
  const std::vector<Rat>& breakpoints() const { return data_.breakpoints(); }

  ExtendedNat operator()(const Rat& t) const { return data_.eval(t); }

  ExtendedNat max_value() const { return data_.max_value(); }
  bool is_bounded() const { return data_.is_bounded(); }
  bool is_zero() const;

  friend bool operator==(const RankFunction& a, const RankFunction& b) {
    return a.data_ == b.data_;
  }
  friend bool operator!=(const RankFunction& a, const RankFunction& b) { return !(a == b); }

 private:
  StepFunction data_;
};

// Pointwise sum (infinity-absorbing).
RankFunction add(const RankFunction& f, const RankFunction& g);

// Pointwise order, decided exactly on the common refinement.
bool leq(const RankFunction& f, const RankFunction& g);

// {t : f(t) >= level} for level >= 1; relatively open because f is lsc.
OpenSet1D level_set(const RankFunction& f, std::uint64_t level);

// Least upper semicontinuous majorant; same breakpoints and interval values,
// point values raised to the local maximum.
StepFunction usc_envelope(const RankFunction& f);

// Constant with a finite value (the compact elements of the lattice).
bool is_compact(const RankFunction& f);

// Pointwise maximum of a leq-increasing chain (throws NotIncreasing).
RankFunction sup_chain(const std::vector<RankFunction>& chain);

}  // namespace culab
