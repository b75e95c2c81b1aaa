#pragma once

#include <vector>

#include "culab/piecewise_linear.hpp"
#include "culab/rank_function.hpp"

namespace culab {

// A concrete realization of a bounded rank function f as the pointwise rank
// of a diagonal positive element: one continuous leg per level, with
// supp_o(legs[i]) equal to the level set {f >= i+1}. Legs are normalized
// distance bumps of height at most 1.
struct Representative {
  std::vector<PiecewiseLinear> legs;

  std::size_t bound() const { return legs.size(); }
};

// Throws PreconditionError(UnboundedRank) when f attains infinity.
Representative build_representative(const RankFunction& f);

// t -> #{i : legs[i](t) > eps}, exact. Requires 0 <= eps < 1.
RankFunction rank_of_cutdown(const Representative& rep, const Rat& eps);

// Three independent decision procedures for compact containment (f "way
// below" g). They must agree; the acceptance suite enforces it.

// Global: f bounded and the usc envelope of f lies under g everywhere
// (equivalent to the existence of a continuous function between f and g).
bool cc_global(const RankFunction& f, const RankFunction& g);

// Local: around every refined breakpoint and on every refined interval there
// is a finite constant c with f <= c <= g on a neighborhood.
bool cc_local(const RankFunction& f, const RankFunction& g);

// Cutdown: some eps > 0 has f <= rank_of_cutdown(representative(g), eps).
// The finite candidate scan over leg-crossing levels is complete because the
// cutdown rank is monotone in eps. Throws UnboundedRank when g is unbounded.
bool cc_cutdown(const RankFunction& f, const RankFunction& g);

// A continuous piecewise-linear w with usc_envelope(f) <= w <= g; the least
// such interpolant on the common refinement. Requires cc_global(f, g),
// else throws PreconditionError(NotCompactlyContained).
PiecewiseLinear witness_insertion(const RankFunction& f, const RankFunction& g);

struct GapWitness {
  OpenSet1D::Interval gap;     // nonempty open interval where witness < g
  PiecewiseLinear witness;     // adjusted witness, still f <= witness <= g
};

// Requires cc_global(f, g) and g noncompact (throws NoGap for compact g).
GapWitness strict_gap_interval(const RankFunction& f, const RankFunction& g);

}  // namespace culab
