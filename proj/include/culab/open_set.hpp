#pragma once

#include <vector>

#include "culab/rational.hpp"

namespace culab {

// A finite union of relatively open subintervals of [0,1].
//
// Intervals are open except that an endpoint of the ambient space may be
// included: lo_closed is legal only when lo == 0, hi_closed only when
// hi == 1 (these are the sets that are open in the relative topology).
// Pieces are kept sorted and pairwise disjoint; touching pieces such as
// (a,b) and (b,c) stay separate because the shared endpoint is in neither.
class OpenSet1D {
 public:
  struct Interval {
    Rat lo;
    Rat hi;
    bool lo_closed = false;
    bool hi_closed = false;
  };

  OpenSet1D() = default;  // the empty set

  // Validates, sorts, and checks disjointness. Throws SchemaError.
  static OpenSet1D from_pieces(std::vector<Interval> pieces);

  static OpenSet1D full();  // [0,1]

  const std::vector<Interval>& intervals() const { return intervals_; }
  bool is_empty() const { return intervals_.empty(); }

  bool contains(const Rat& t) const;

  // Total length of the pieces (ignores endpoint flags).
  Rat length() const;

  friend bool operator==(const OpenSet1D& a, const OpenSet1D& b);

 private:
  std::vector<Interval> intervals_;
};

bool operator==(const OpenSet1D::Interval& a, const OpenSet1D::Interval& b);

}  // namespace culab
