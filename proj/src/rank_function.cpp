#include "culab/rank_function.hpp"

#include <algorithm>

#include "culab/errors.hpp"

namespace culab {

namespace {

void check_lower_semicontinuous(const StepFunction& s) {
  const auto& iv = s.interval_values();
  const auto& pv = s.point_values();
  const std::size_t m = iv.size();
  if (pv.front() > iv.front()) throw SchemaError("not lsc at t = 0");
  if (pv.back() > iv.back()) throw SchemaError("not lsc at t = 1");
  for (std::size_t i = 1; i < m; ++i) {
    if (pv[i] > min(iv[i - 1], iv[i])) throw SchemaError("not lsc at interior breakpoint");
  }
}

}  // namespace

RankFunction::RankFunction(StepFunction data) : data_(data.canonicalized()) {
  check_lower_semicontinuous(data_);
}

RankFunction::RankFunction(std::vector<Rat> breakpoints, std::vector<ExtendedNat> interval_values,
                           std::vector<ExtendedNat> point_values)
    : RankFunction(StepFunction(std::move(breakpoints), std::move(interval_values),
                                std::move(point_values))) {}

RankFunction RankFunction::constant(ExtendedNat value) {
  return RankFunction(StepFunction::constant(value));
}

RankFunction RankFunction::indicator(const OpenSet1D& support) {
  std::vector<Rat> bps{Rat(0)};
  for (const auto& piece : support.intervals()) {
    if (piece.lo != bps.back()) bps.push_back(piece.lo);
    if (piece.hi != bps.back()) bps.push_back(piece.hi);
  }
  if (bps.back() != 1) bps.push_back(Rat(1));
  std::vector<ExtendedNat> iv;
  std::vector<ExtendedNat> pv;
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Rat mid = (bps[i] + bps[i + 1]) / 2;
    iv.push_back(ExtendedNat(support.contains(mid) ? 1 : 0));
  }
  for (const Rat& t : bps) pv.push_back(ExtendedNat(support.contains(t) ? 1 : 0));
  return RankFunction(StepFunction(std::move(bps), std::move(iv), std::move(pv)));
}

bool RankFunction::is_zero() const {
  return data_.piece_count() == 1 && data_.max_value() == ExtendedNat(0);
}

RankFunction add(const RankFunction& f, const RankFunction& g) {
  auto [rf, rg] = StepFunction::refine_pair(f.step(), g.step());
  std::vector<ExtendedNat> iv;
  std::vector<ExtendedNat> pv;
  for (std::size_t i = 0; i < rf.piece_count(); ++i) {
    iv.push_back(rf.interval_values()[i] + rg.interval_values()[i]);
  }
  for (std::size_t i = 0; i <= rf.piece_count(); ++i) {
    pv.push_back(rf.point_values()[i] + rg.point_values()[i]);
  }
  return RankFunction(StepFunction(rf.breakpoints(), std::move(iv), std::move(pv)));
}

bool leq(const RankFunction& f, const RankFunction& g) {
  auto [rf, rg] = StepFunction::refine_pair(f.step(), g.step());
  for (std::size_t i = 0; i < rf.piece_count(); ++i) {
    if (rf.interval_values()[i] > rg.interval_values()[i]) return false;
  }
  for (std::size_t i = 0; i <= rf.piece_count(); ++i) {
    if (rf.point_values()[i] > rg.point_values()[i]) return false;
  }
  return true;
}

OpenSet1D level_set(const RankFunction& f, std::uint64_t level) {
  if (level == 0) throw PreconditionError("BadLevel", "level_set needs level >= 1");
  const ExtendedNat threshold(level);
  const auto& s = f.step();
  const auto& bps = s.breakpoints();
  const auto& iv = s.interval_values();
  const auto& pv = s.point_values();

  std::vector<OpenSet1D::Interval> pieces;
  bool run_open = false;
  OpenSet1D::Interval run;
  for (std::size_t i = 0; i < iv.size(); ++i) {
    const bool in = iv[i] >= threshold;
    if (in && !run_open) {
      run = OpenSet1D::Interval{bps[i], bps[i + 1], pv[i] >= threshold, false};
      // lo_closed can only fire at t = 0: an included interior breakpoint
      // would force both adjacent intervals in (lsc), so no run starts there.
      run_open = true;
    } else if (in && run_open) {
      run.hi = bps[i + 1];
    }
    if (run_open) {
      const bool boundary_in = pv[i + 1] >= threshold;
      const bool next_in = (i + 1 < iv.size()) && iv[i + 1] >= threshold;
      if (!next_in || !boundary_in) {
        run.hi = bps[i + 1];
        run.hi_closed = boundary_in && bps[i + 1] == 1;
        pieces.push_back(run);
        run_open = false;
      }
    }
  }
  return OpenSet1D::from_pieces(std::move(pieces));
}

StepFunction usc_envelope(const RankFunction& f) {
  const auto& s = f.step();
  const auto& iv = s.interval_values();
  const auto& pv = s.point_values();
  std::vector<ExtendedNat> env;
  env.reserve(pv.size());
  for (std::size_t i = 0; i < pv.size(); ++i) {
    ExtendedNat v = pv[i];
    if (i > 0) v = max(v, iv[i - 1]);
    if (i < iv.size()) v = max(v, iv[i]);
    env.push_back(v);
  }
  return StepFunction(s.breakpoints(), iv, std::move(env));
}

bool is_compact(const RankFunction& f) {
  const auto& s = f.step();
  if (s.piece_count() != 1) return false;  // canonical form: constants collapse
  const ExtendedNat v = s.interval_values()[0];
  return !v.is_infinite() && s.point_values()[0] == v && s.point_values()[1] == v;
}

RankFunction sup_chain(const std::vector<RankFunction>& chain) {
  if (chain.empty()) throw PreconditionError("NotIncreasing", "sup_chain of empty chain");
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (!leq(chain[i - 1], chain[i])) {
      throw PreconditionError("NotIncreasing", "chain is not leq-increasing");
    }
  }
  // Pointwise max over the common refinement; for an increasing chain this
  // is the supremum (and equals the last element).
  StepFunction acc = chain.front().step();
  for (std::size_t i = 1; i < chain.size(); ++i) {
    auto [ra, rb] = StepFunction::refine_pair(acc, chain[i].step());
    std::vector<ExtendedNat> iv;
    std::vector<ExtendedNat> pv;
    for (std::size_t j = 0; j < ra.piece_count(); ++j) {
      iv.push_back(max(ra.interval_values()[j], rb.interval_values()[j]));
    }
    for (std::size_t j = 0; j <= ra.piece_count(); ++j) {
      pv.push_back(max(ra.point_values()[j], rb.point_values()[j]));
    }
    acc = StepFunction(ra.breakpoints(), std::move(iv), std::move(pv));
  }
  return RankFunction(acc);
}

}  // namespace culab
