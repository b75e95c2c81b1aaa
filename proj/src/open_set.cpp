#include "culab/open_set.hpp"

#include <algorithm>

#include "culab/errors.hpp"

namespace culab {

bool operator==(const OpenSet1D::Interval& a, const OpenSet1D::Interval& b) {
  return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed &&
         a.hi_closed == b.hi_closed;
}

OpenSet1D OpenSet1D::from_pieces(std::vector<Interval> pieces) {
  for (const Interval& iv : pieces) {
    if (iv.lo < 0 || iv.hi > 1) throw SchemaError("interval outside [0,1]");
    if (!(iv.lo < iv.hi)) throw SchemaError("degenerate interval (lo >= hi)");
    if (iv.lo_closed && iv.lo != 0) throw SchemaError("lo_closed requires lo == 0");
    if (iv.hi_closed && iv.hi != 1) throw SchemaError("hi_closed requires hi == 1");
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].lo < pieces[i - 1].hi) throw SchemaError("overlapping intervals");
    // lo == previous hi is fine: both sides exclude the shared point
    // (closure flags cannot collide there, they only exist at 0 and 1).
  }
  OpenSet1D s;
  s.intervals_ = std::move(pieces);
  return s;
}

OpenSet1D OpenSet1D::full() {
  return from_pieces({Interval{Rat(0), Rat(1), true, true}});
}

bool OpenSet1D::contains(const Rat& t) const {
  for (const Interval& iv : intervals_) {
    if (t < iv.lo) return false;
    if (t == iv.lo) return iv.lo_closed;
    if (t < iv.hi) return true;
    if (t == iv.hi) return iv.hi_closed;
  }
  return false;
}

Rat OpenSet1D::length() const {
  Rat total(0);
  for (const Interval& iv : intervals_) total += iv.hi - iv.lo;
  return total;
}

bool operator==(const OpenSet1D& a, const OpenSet1D& b) {
  return a.intervals_ == b.intervals_;
}

}  // namespace culab
