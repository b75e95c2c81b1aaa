#include "culab/piecewise_linear.hpp"

#include <algorithm>

#include "culab/errors.hpp"
#include "culab/step_function.hpp"

namespace culab {

PiecewiseLinear::PiecewiseLinear(std::vector<Rat> knots, std::vector<Rat> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.size() < 2 || knots_.front() != 0 || knots_.back() != 1) {
    throw SchemaError("knots must run from 0 to 1");
  }
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i - 1] < knots_[i])) throw SchemaError("knots must be strictly increasing");
  }
  if (values_.size() != knots_.size()) throw SchemaError("one value per knot required");
}

PiecewiseLinear PiecewiseLinear::constant(const Rat& c) {
  return PiecewiseLinear({Rat(0), Rat(1)}, {c, c});
}

Rat PiecewiseLinear::eval(const Rat& t) const {
  if (t < 0 || t > 1) throw PreconditionError("OutOfDomain", "eval outside [0,1]");
  auto it = std::lower_bound(knots_.begin(), knots_.end(), t);
  std::size_t idx = static_cast<std::size_t>(it - knots_.begin());
  if (it != knots_.end() && *it == t) return values_[idx];
  const Rat& x0 = knots_[idx - 1];
  const Rat& x1 = knots_[idx];
  const Rat& y0 = values_[idx - 1];
  const Rat& y1 = values_[idx];
  return y0 + (y1 - y0) * (t - x0) / (x1 - x0);
}

Rat PiecewiseLinear::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

Rat PiecewiseLinear::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

PiecewiseLinear PiecewiseLinear::refined_to(const std::vector<Rat>& superset) const {
  std::vector<Rat> vals;
  vals.reserve(superset.size());
  for (const Rat& x : superset) vals.push_back(eval(x));
  return PiecewiseLinear(superset, std::move(vals));
}

PiecewiseLinear add(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  std::vector<Rat> merged = merge_breakpoints(a.knots_, b.knots_);
  std::vector<Rat> vals;
  vals.reserve(merged.size());
  for (const Rat& x : merged) vals.push_back(a.eval(x) + b.eval(x));
  return PiecewiseLinear(std::move(merged), std::move(vals));
}

PiecewiseLinear subtract(const PiecewiseLinear& a, const PiecewiseLinear& b) {
  std::vector<Rat> merged = merge_breakpoints(a.knots_, b.knots_);
  std::vector<Rat> vals;
  vals.reserve(merged.size());
  for (const Rat& x : merged) vals.push_back(a.eval(x) - b.eval(x));
  return PiecewiseLinear(std::move(merged), std::move(vals));
}

OpenSet1D PiecewiseLinear::strictly_above(const Rat& level) const {
  // Refine so the sign of f - level is constant on every open piece.
  std::vector<Rat> grid = knots_;
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    const Rat& y0 = values_[i];
    const Rat& y1 = values_[i + 1];
    if ((y0 < level && y1 > level) || (y0 > level && y1 < level)) {
      grid.push_back(knots_[i] + (level - y0) * (knots_[i + 1] - knots_[i]) / (y1 - y0));
    }
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<OpenSet1D::Interval> pieces;
  bool run_open = false;
  OpenSet1D::Interval run;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const bool in = eval((grid[i] + grid[i + 1]) / 2) > level;
    const bool lo_in = eval(grid[i]) > level;
    if (in && !run_open) {
      run = OpenSet1D::Interval{grid[i], grid[i + 1], lo_in && grid[i] == 0, false};
      run_open = true;
    } else if (in) {
      run.hi = grid[i + 1];
    }
    if (run_open) {
      const bool hi_in = eval(grid[i + 1]) > level;
      const bool next_in = (i + 2 < grid.size()) && eval((grid[i + 1] + grid[i + 2]) / 2) > level;
      if (!next_in || !hi_in) {
        run.hi = grid[i + 1];
        run.hi_closed = hi_in && grid[i + 1] == 1;
        pieces.push_back(run);
        run_open = false;
      }
    }
  }
  return OpenSet1D::from_pieces(std::move(pieces));
}

std::vector<Rat> PiecewiseLinear::crossing_points(const PiecewiseLinear& a,
                                                  const PiecewiseLinear& b) {
  std::vector<Rat> merged = merge_breakpoints(a.knots_, b.knots_);
  std::vector<Rat> out;
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    const Rat d0 = a.eval(merged[i]) - b.eval(merged[i]);
    const Rat d1 = a.eval(merged[i + 1]) - b.eval(merged[i + 1]);
    if ((d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0)) {
      out.push_back(merged[i] + (Rat(0) - d0) * (merged[i + 1] - merged[i]) / (d1 - d0));
    }
  }
  return out;
}

PiecewiseLinear tent_bump(const Rat& lo, const Rat& hi, const Rat& height) {
  if (!(lo < hi) || lo < 0 || hi > 1) throw PreconditionError("BadInterval", "tent_bump");
  std::vector<Rat> knots{Rat(0)};
  std::vector<Rat> vals{Rat(0)};
  if (lo > 0) {
    knots.push_back(lo);
    vals.push_back(Rat(0));
  }
  knots.push_back((lo + hi) / 2);
  vals.push_back(height);
  if (hi < 1) {
    knots.push_back(hi);
    vals.push_back(Rat(0));
  }
  knots.push_back(Rat(1));
  vals.push_back(Rat(0));
  return PiecewiseLinear(std::move(knots), std::move(vals));
}

}  // namespace culab
