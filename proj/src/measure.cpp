#include "culab/measure.hpp"

#include <algorithm>

#include "culab/errors.hpp"
#include "culab/step_function.hpp"

namespace culab {

namespace {

Rat density_integral(const std::vector<Rat>& bps, const std::vector<Rat>& vals) {
  Rat total(0);
  for (std::size_t i = 0; i < vals.size(); ++i) total += vals[i] * (bps[i + 1] - bps[i]);
  return total;
}

// Density mass of the open interval (lo, hi).
Rat density_overlap(const std::vector<Rat>& bps, const std::vector<Rat>& vals, const Rat& lo,
                    const Rat& hi) {
  Rat total(0);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    const Rat a = max_rat(bps[i], lo);
    const Rat b = min_rat(bps[i + 1], hi);
    if (a < b) total += vals[i] * (b - a);
  }
  return total;
}

}  // namespace

Measure1D::Measure1D(std::vector<Atom> atoms, std::vector<Rat> density_breakpoints,
                     std::vector<Rat> density_values)
    : atoms_(std::move(atoms)),
      density_breakpoints_(std::move(density_breakpoints)),
      density_values_(std::move(density_values)) {
  if (density_breakpoints_.empty() && density_values_.empty()) {
    density_breakpoints_ = {Rat(0), Rat(1)};
    density_values_ = {Rat(0)};
  }
  if (density_breakpoints_.size() < 2 || density_breakpoints_.front() != 0 ||
      density_breakpoints_.back() != 1) {
    throw SchemaError("density partition must run from 0 to 1");
  }
  for (std::size_t i = 1; i < density_breakpoints_.size(); ++i) {
    if (!(density_breakpoints_[i - 1] < density_breakpoints_[i])) {
      throw SchemaError("density breakpoints must be strictly increasing");
    }
  }
  if (density_values_.size() + 1 != density_breakpoints_.size()) {
    throw SchemaError("density needs one value per piece");
  }
  for (const Rat& v : density_values_) {
    if (v < 0) throw SchemaError("negative density");
  }
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  Rat total = density_integral(density_breakpoints_, density_values_);
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    const Atom& a = atoms_[i];
    if (a.location < 0 || a.location > 1) throw SchemaError("atom outside [0,1]");
    if (!(a.mass > 0)) throw SchemaError("atom mass must be positive");
    if (i > 0 && atoms_[i - 1].location == a.location) {
      throw SchemaError("duplicate atom location");
    }
    total += a.mass;
  }
  if (total != 1) throw SchemaError("total mass must be exactly 1, got " + format_rat(total));
}

Measure1D Measure1D::lebesgue() {
  return Measure1D({}, {Rat(0), Rat(1)}, {Rat(1)});
}

Measure1D Measure1D::dirac(const Rat& at) { return atomic({Atom{at, Rat(1)}}); }

Measure1D Measure1D::atomic(std::vector<Atom> atoms) {
  return Measure1D(std::move(atoms), {Rat(0), Rat(1)}, {Rat(0)});
}

Measure1D Measure1D::mix(const std::vector<Measure1D>& parts, const std::vector<Rat>& weights) {
  if (parts.empty() || parts.size() != weights.size()) {
    throw PreconditionError("BadMixture", "mix needs one weight per measure");
  }
  Rat wsum(0);
  for (const Rat& w : weights) {
    if (w < 0) throw PreconditionError("BadMixture", "negative mixture weight");
    wsum += w;
  }
  if (wsum != 1) throw PreconditionError("BadMixture", "mixture weights must sum to 1");

  // Merge atoms at coinciding locations.
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (weights[i] == 0) continue;
    for (const Atom& a : parts[i].atoms_) {
      atoms.push_back(Atom{a.location, a.mass * weights[i]});
    }
  }
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  std::vector<Atom> merged;
  for (const Atom& a : atoms) {
    if (!merged.empty() && merged.back().location == a.location) {
      merged.back().mass += a.mass;
    } else {
      merged.push_back(a);
    }
  }

  // Sum densities over the refined partition.
  std::vector<Rat> grid{Rat(0), Rat(1)};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (weights[i] == 0) continue;
    grid = merge_breakpoints(grid, parts[i].density_breakpoints_);
  }
  std::vector<Rat> vals(grid.size() - 1, Rat(0));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (weights[i] == 0) continue;
    const auto& bps = parts[i].density_breakpoints_;
    const auto& dv = parts[i].density_values_;
    std::size_t k = 0;
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
      while (bps[k + 1] <= grid[j]) ++k;
      vals[j] += weights[i] * dv[k];
    }
  }
  return Measure1D(std::move(merged), std::move(grid), std::move(vals));
}

bool Measure1D::is_atomic() const {
  for (const Rat& v : density_values_) {
    if (v != 0) return false;
  }
  return true;
}

Rat Measure1D::atom_mass_total() const {
  Rat total(0);
  for (const Atom& a : atoms_) total += a.mass;
  return total;
}

bool operator==(const Measure1D& a, const Measure1D& b) {
  if (a.atoms_.size() != b.atoms_.size()) return false;
  for (std::size_t i = 0; i < a.atoms_.size(); ++i) {
    if (a.atoms_[i].location != b.atoms_[i].location) return false;
    if (a.atoms_[i].mass != b.atoms_[i].mass) return false;
  }
  return a.density_breakpoints_ == b.density_breakpoints_ &&
         a.density_values_ == b.density_values_;
}

Rat measure_of(const Measure1D& mu, const OpenSet1D& s) {
  Rat total(0);
  for (const auto& piece : s.intervals()) {
    total += density_overlap(mu.density_breakpoints(), mu.density_values(), piece.lo, piece.hi);
  }
  for (const auto& atom : mu.atoms()) {
    if (s.contains(atom.location)) total += atom.mass;
  }
  return total;
}

ExtendedRat integrate_rank(const Measure1D& mu, const RankFunction& f) {
  const auto& s = f.step();
  // Infinite pieces of positive measure force an infinite integral; infinite
  // values carried only by null breakpoints do not contribute.
  for (std::size_t i = 0; i < s.piece_count(); ++i) {
    if (!s.interval_values()[i].is_infinite()) continue;
    OpenSet1D piece = OpenSet1D::from_pieces(
        {OpenSet1D::Interval{s.breakpoints()[i], s.breakpoints()[i + 1], false, false}});
    if (measure_of(mu, piece) > 0) return ExtendedRat::infinity();
  }
  for (std::size_t i = 0; i <= s.piece_count(); ++i) {
    if (!s.point_values()[i].is_infinite()) continue;
    for (const auto& atom : mu.atoms()) {
      if (atom.location == s.breakpoints()[i]) return ExtendedRat::infinity();
    }
  }
  ExtendedNat top(0);
  for (const auto& v : s.interval_values()) {
    if (!v.is_infinite()) top = max(top, v);
  }
  for (const auto& v : s.point_values()) {
    if (!v.is_infinite()) top = max(top, v);
  }
  Rat total(0);
  for (std::uint64_t level = 1; level <= top.finite(); ++level) {
    total += measure_of(mu, level_set(f, level));
  }
  return ExtendedRat(total);
}

bool is_faithful(const Measure1D& mu) {
  for (const Rat& v : mu.density_values()) {
    if (!(v > 0)) return false;
  }
  return true;
}

Measure1D discretize(const Measure1D& mu, std::uint64_t m) {
  if (m == 0) throw PreconditionError("BadResolution", "discretize needs m >= 1");
  if (mu.is_atomic()) return mu;

  std::vector<Measure1D::Atom> atoms = mu.atoms();
  const auto& bps = mu.density_breakpoints();
  const auto& vals = mu.density_values();
  for (std::uint64_t j = 0; j < m; ++j) {
    const Rat lo(Int(j), Int(m));
    const Rat hi(Int(j + 1), Int(m));
    const Rat cell_mass = density_overlap(bps, vals, lo, hi);
    if (cell_mass == 0) continue;
    // Conditional median of the density restricted to the cell.
    const Rat half = cell_mass / 2;
    Rat acc(0);
    Rat median = hi;
    for (std::size_t i = 0; i < vals.size() && acc < half; ++i) {
      const Rat a = max_rat(bps[i], lo);
      const Rat b = min_rat(bps[i + 1], hi);
      if (!(a < b) || vals[i] == 0) continue;
      const Rat piece = vals[i] * (b - a);
      if (acc + piece >= half) {
        median = a + (half - acc) / vals[i];
        acc = half;
        break;
      }
      acc += piece;
    }
    atoms.push_back(Measure1D::Atom{median, cell_mass});
  }
  // Collapsed cell medians may coincide with existing atom locations.
  std::sort(atoms.begin(), atoms.end(),
            [](const Measure1D::Atom& a, const Measure1D::Atom& b) {
              return a.location < b.location;
            });
  std::vector<Measure1D::Atom> merged;
  for (const auto& a : atoms) {
    if (!merged.empty() && merged.back().location == a.location) {
      merged.back().mass += a.mass;
    } else {
      merged.push_back(a);
    }
  }
  return Measure1D::atomic(std::move(merged));
}

Rat integrate_linear(const Measure1D& mu, const PiecewiseLinear& probe) {
  Rat total(0);
  for (const auto& atom : mu.atoms()) total += atom.mass * probe.eval(atom.location);
  // Piecewise: on a common grid the probe is linear and the density constant,
  // so each piece contributes density * average-endpoint-value * length.
  std::vector<Rat> grid = merge_breakpoints(mu.density_breakpoints(), probe.knots());
  std::size_t k = 0;
  const auto& bps = mu.density_breakpoints();
  for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
    while (bps[k + 1] <= grid[j]) ++k;
    const Rat avg = (probe.eval(grid[j]) + probe.eval(grid[j + 1])) / 2;
    total += mu.density_values()[k] * avg * (grid[j + 1] - grid[j]);
  }
  return total;
}

}  // namespace culab
