#include "culab/containment.hpp"

#include <algorithm>
#include <set>

#include "culab/errors.hpp"

namespace culab {

namespace {

// Normalized distance-to-complement bump on one relatively open piece:
// height exactly 1, rational knots, open support equal to the piece.
// Pieces touching an included 0 or 1 get a plateau instead of a tent.
PiecewiseLinear piece_bump(const OpenSet1D::Interval& piece) {
  const Rat& a = piece.lo;
  const Rat& b = piece.hi;
  std::vector<Rat> knots{Rat(0)};
  std::vector<Rat> vals;
  if (piece.lo_closed && piece.hi_closed) {
    return PiecewiseLinear::constant(Rat(1));
  }
  if (piece.lo_closed) {
    // [0, b): min(1, 2(b - t)/b), plateau on [0, b/2]
    vals.push_back(Rat(1));
    knots.push_back(b / 2);
    vals.push_back(Rat(1));
    knots.push_back(b);
    vals.push_back(Rat(0));
    if (b != 1) {
      knots.push_back(Rat(1));
      vals.push_back(Rat(0));
    }
  } else if (piece.hi_closed) {
    // (a, 1]: mirror plateau on [(a+1)/2, 1]
    vals.push_back(Rat(0));
    if (a != 0) {
      knots.push_back(a);
      vals.push_back(Rat(0));
    }
    knots.push_back((a + 1) / 2);
    vals.push_back(Rat(1));
    knots.push_back(Rat(1));
    vals.push_back(Rat(1));
  } else {
    // (a, b): tent with apex 1 at the midpoint
    vals.push_back(Rat(0));
    if (a != 0) {
      knots.push_back(a);
      vals.push_back(Rat(0));
    }
    knots.push_back((a + b) / 2);
    vals.push_back(Rat(1));
    if (b != 1) {
      knots.push_back(b);
      vals.push_back(Rat(0));
    }
    knots.push_back(Rat(1));
    vals.push_back(Rat(0));
  }
  return PiecewiseLinear(std::move(knots), std::move(vals));
}

bool leq_step(const StepFunction& a, const StepFunction& b) {
  auto [ra, rb] = StepFunction::refine_pair(a, b);
  for (std::size_t i = 0; i < ra.piece_count(); ++i) {
    if (ra.interval_values()[i] > rb.interval_values()[i]) return false;
  }
  for (std::size_t i = 0; i <= ra.piece_count(); ++i) {
    if (ra.point_values()[i] > rb.point_values()[i]) return false;
  }
  return true;
}

}  // namespace

Representative build_representative(const RankFunction& f) {
  if (!f.is_bounded()) {
    throw PreconditionError("UnboundedRank", "representative needs a bounded rank function");
  }
  const std::uint64_t top = f.max_value().finite();
  std::vector<PiecewiseLinear> legs;
  legs.reserve(top);
  for (std::uint64_t level = 1; level <= top; ++level) {
    const OpenSet1D support = level_set(f, level);
    PiecewiseLinear leg = PiecewiseLinear::constant(Rat(0));
    for (const auto& piece : support.intervals()) leg = add(leg, piece_bump(piece));
    legs.push_back(std::move(leg));
  }
  return Representative{std::move(legs)};
}

RankFunction rank_of_cutdown(const Representative& rep, const Rat& eps) {
  if (eps < 0 || eps >= 1) {
    throw PreconditionError("BadCutdown", "eps must lie in [0, 1)");
  }
  RankFunction out = RankFunction::zero();
  for (const auto& leg : rep.legs) {
    out = add(out, RankFunction::indicator(leg.strictly_above(eps)));
  }
  return out;
}

bool cc_global(const RankFunction& f, const RankFunction& g) {
  if (!f.is_bounded()) return false;
  return leq_step(usc_envelope(f), g.step());
}

bool cc_local(const RankFunction& f, const RankFunction& g) {
  auto [rf, rg] = StepFunction::refine_pair(f.step(), g.step());
  const std::size_t m = rf.piece_count();
  // One interior sample per refined interval: the witness constant must be
  // finite, so an infinite value of f kills the pair.
  for (std::size_t i = 0; i < m; ++i) {
    const ExtendedNat& vf = rf.interval_values()[i];
    if (vf.is_infinite() || vf > rg.interval_values()[i]) return false;
  }
  // At each breakpoint: largest f-value on a small two-sided neighborhood
  // against the smallest g-value there.
  for (std::size_t i = 0; i <= m; ++i) {
    ExtendedNat f_near = rf.point_values()[i];
    ExtendedNat g_near = rg.point_values()[i];
    if (i > 0) {
      f_near = max(f_near, rf.interval_values()[i - 1]);
      g_near = min(g_near, rg.interval_values()[i - 1]);
    }
    if (i < m) {
      f_near = max(f_near, rf.interval_values()[i]);
      g_near = min(g_near, rg.interval_values()[i]);
    }
    if (f_near.is_infinite() || f_near > g_near) return false;
  }
  return true;
}

bool cc_cutdown(const RankFunction& f, const RankFunction& g) {
  if (!g.is_bounded()) {
    throw PreconditionError("UnboundedRank", "cc_cutdown needs bounded g; use cc_global");
  }
  if (f.is_zero()) return true;
  const Representative rep = build_representative(g);
  if (rep.legs.empty()) return false;  // g = 0 but f != 0

  // Candidate levels: leg values at every structural parameter (leg knots,
  // breakpoints of f, pairwise leg crossings), plus midpoints between
  // consecutive levels. Monotonicity of the cutdown rank in eps makes this
  // finite scan complete.
  std::set<Rat> params;
  for (const auto& leg : rep.legs) {
    for (const Rat& x : leg.knots()) params.insert(x);
  }
  for (const Rat& x : f.breakpoints()) params.insert(x);
  for (std::size_t i = 0; i < rep.legs.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.legs.size(); ++j) {
      for (const Rat& x : PiecewiseLinear::crossing_points(rep.legs[i], rep.legs[j])) {
        params.insert(x);
      }
    }
  }
  std::set<Rat> levels;
  levels.insert(Rat(0));
  levels.insert(Rat(1));
  for (const auto& leg : rep.legs) {
    for (const Rat& p : params) {
      const Rat v = leg.eval(p);
      if (v > 0 && v < 1) levels.insert(v);
    }
  }
  std::vector<Rat> sorted(levels.begin(), levels.end());
  std::vector<Rat> candidates;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] > 0) candidates.push_back(sorted[i]);
    candidates.push_back((sorted[i] + sorted[i + 1]) / 2);
  }
  // The cutdown rank is pointwise antitone in eps, so the ascending scan is
  // settled by its first candidate: if that one fails, every larger eps
  // yields a smaller cutdown and fails too.
  return leq(f, rank_of_cutdown(rep, candidates.front()));
}

PiecewiseLinear witness_insertion(const RankFunction& f, const RankFunction& g) {
  if (!cc_global(f, g)) {
    throw PreconditionError("NotCompactlyContained", "witness_insertion needs f << g");
  }
  const std::vector<Rat> grid = merge_breakpoints(f.breakpoints(), g.breakpoints());
  const StepFunction env = usc_envelope(f).refined_to(grid);
  std::vector<Rat> vals;
  vals.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    vals.push_back(Rat(env.point_values()[i].finite()));
  }
  return PiecewiseLinear(grid, std::move(vals));
}

GapWitness strict_gap_interval(const RankFunction& f, const RankFunction& g) {
  if (!cc_global(f, g)) {
    throw PreconditionError("NotCompactlyContained", "strict_gap_interval needs f << g");
  }
  if (is_compact(g)) {
    throw PreconditionError("NoGap", "g is compact, no strict gap interval exists");
  }
  PiecewiseLinear w = witness_insertion(f, g);
  auto [rf, rg] = StepFunction::refine_pair(f.step(), g.step());

  // Some refined interval has f strictly under g; otherwise g would be a
  // finite constant, contradicting noncompactness.
  std::size_t pick = rf.piece_count();
  for (std::size_t i = 0; i < rf.piece_count(); ++i) {
    if (rf.interval_values()[i] < rg.interval_values()[i]) {
      pick = i;
      break;
    }
  }
  if (pick == rf.piece_count()) {
    throw PreconditionError("NoGap", "no interval with a strict rank gap");
  }
  const Rat a = rf.breakpoints()[pick];
  const Rat b = rf.breakpoints()[pick + 1];
  const ExtendedNat vf = rf.interval_values()[pick];
  const ExtendedNat vg = rg.interval_values()[pick];
  const Rat wa = w.eval(a);
  const Rat wb = w.eval(b);

  const OpenSet1D::Interval gap{a, b, false, false};
  if (!vg.is_infinite() && wa == Rat(vg.finite()) && wb == Rat(vg.finite())) {
    // Witness rides g on the interval: push it down by half.
    return GapWitness{gap, subtract(w, tent_bump(a, b, Rat(1, 2)))};
  }
  if (wa == Rat(vf.finite()) && wb == Rat(vf.finite())) {
    // Witness rides f: push it up by half; still under g since the gap is
    // at least one full integer step.
    return GapWitness{gap, add(w, tent_bump(a, b, Rat(1, 2)))};
  }
  // Mixed endpoints: the linear witness is already strictly below g on the
  // whole open interval.
  return GapWitness{gap, w};
}

}  // namespace culab
