#pragma once

#include <vector>

#include "culab/open_set.hpp"
#include "culab/rational.hpp"

namespace culab {

// A continuous piecewise-linear function on [0,1] with rational knots and
// values. Everything it supports (evaluation, crossings, strict level sets)
// is exact.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<Rat> knots, std::vector<Rat> values);

  static PiecewiseLinear constant(const Rat& c);

  const std::vector<Rat>& knots() const { return knots_; }
  const std::vector<Rat>& values() const { return values_; }

  Rat eval(const Rat& t) const;

  Rat max_value() const;
  Rat min_value() const;

  // Same function represented over a knot superset.
  PiecewiseLinear refined_to(const std::vector<Rat>& superset) const;

  // {t : f(t) > level}, a relatively open subset of [0,1].
  OpenSet1D strictly_above(const Rat& level) const;

  friend PiecewiseLinear add(const PiecewiseLinear& a, const PiecewiseLinear& b);
  friend PiecewiseLinear subtract(const PiecewiseLinear& a, const PiecewiseLinear& b);

  // Parameters t where two functions take equal values, knot-exact; used to
  // enumerate the critical levels of a family of legs.
  static std::vector<Rat> crossing_points(const PiecewiseLinear& a, const PiecewiseLinear& b);

 private:
  std::vector<Rat> knots_;   // 0 = x_0 < ... < x_r = 1
  std::vector<Rat> values_;  // value at each knot
};

// A bump of the given height supported on (lo, hi): tent with apex at the
// midpoint, zero outside.
PiecewiseLinear tent_bump(const Rat& lo, const Rat& hi, const Rat& height);

}  // namespace culab
