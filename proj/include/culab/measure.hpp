#pragma once

#include <cstdint>
#include <vector>

#include "culab/extended.hpp"
#include "culab/open_set.hpp"
#include "culab/piecewise_linear.hpp"
#include "culab/rank_function.hpp"

namespace culab {

// A regular Borel probability measure on [0,1] in the exactly computable
// class: finitely many atoms plus a piecewise-constant density. Total mass
// is always exactly 1.
class Measure1D {
 public:
  struct Atom {
    Rat location;  // in [0,1]
    Rat mass;      // > 0
  };

  // density_breakpoints: 0 = s_0 < ... < s_r = 1; density_values: one
  // nonnegative rational per piece. Throws SchemaError if the data is
  // malformed or total mass differs from 1.
  Measure1D(std::vector<Atom> atoms, std::vector<Rat> density_breakpoints,
            std::vector<Rat> density_values);

  static Measure1D lebesgue();
  static Measure1D dirac(const Rat& at);
  static Measure1D atomic(std::vector<Atom> atoms);

  // Convex mixture with the given barycentric weights (sum 1, each >= 0).
  static Measure1D mix(const std::vector<Measure1D>& parts, const std::vector<Rat>& weights);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Rat>& density_breakpoints() const { return density_breakpoints_; }
  const std::vector<Rat>& density_values() const { return density_values_; }

  bool is_atomic() const;
  Rat atom_mass_total() const;

  friend bool operator==(const Measure1D& a, const Measure1D& b);

 private:
  std::vector<Atom> atoms_;  // sorted by location, distinct
  std::vector<Rat> density_breakpoints_;
  std::vector<Rat> density_values_;
};

// Exact measure of a relatively open set: atoms inside plus density overlap.
Rat measure_of(const Measure1D& mu, const OpenSet1D& s);

// Layer-cake integral: sum over levels i >= 1 of measure_of(level_set(f,i)).
// Infinite exactly when f is infinite on a set of positive mu-measure (a
// positive-density region or an atom sitting on an infinite point).
ExtendedRat integrate_rank(const Measure1D& mu, const RankFunction& f);

// Positive on every nonempty open set; within this measure class that means
// every density piece is strictly positive.
bool is_faithful(const Measure1D& mu);

// Collapses the density onto at most m atoms (conditional median of each
// width-1/m cell); atoms pass through untouched. Certifies
// d_LP(mu, discretize(mu, m)) <= 1/m since no mass moves farther than 1/m.
Measure1D discretize(const Measure1D& mu, std::uint64_t m);

// Exact integral of a continuous piecewise-linear test function.
Rat integrate_linear(const Measure1D& mu, const PiecewiseLinear& probe);

}  // namespace culab
