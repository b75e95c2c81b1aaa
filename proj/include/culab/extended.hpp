#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "culab/errors.hpp"
#include "culab/rational.hpp"

namespace culab {

// A totally ordered value with an absorbing top element adjoined.
// Addition is infinity-absorbing; every finite value is below infinity.
template <typename T>
class Extended {
 public:
  Extended() : value_(T{}) {}
  Extended(T v) : value_(std::move(v)) {}  // NOLINT: implicit by design

  static Extended infinity() {
    Extended e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }

  const T& finite() const {
    if (infinite_) throw PreconditionError("InfiniteValue", "finite() on infinity");
    return value_;
  }

  friend Extended operator+(const Extended& a, const Extended& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Extended(a.value_ + b.value_);
  }

  Extended& operator+=(const Extended& other) { return *this = *this + other; }

  friend bool operator==(const Extended& a, const Extended& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }
  friend bool operator!=(const Extended& a, const Extended& b) { return !(a == b); }
  friend bool operator<(const Extended& a, const Extended& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Extended& a, const Extended& b) { return a == b || a < b; }
  friend bool operator>(const Extended& a, const Extended& b) { return b < a; }
  friend bool operator>=(const Extended& a, const Extended& b) { return b <= a; }

  friend const Extended& min(const Extended& a, const Extended& b) { return b < a ? b : a; }
  friend const Extended& max(const Extended& a, const Extended& b) { return a < b ? b : a; }

 private:
  T value_;
  bool infinite_ = false;
};

// The value lattice of rank functions: naturals with infinity adjoined.
using ExtendedNat = Extended<std::uint64_t>;

// Codomain of dimension pairings and rank integrals: [0, inf].
using ExtendedRat = Extended<Rat>;

inline ExtendedRat to_extended_rat(const ExtendedNat& n) {
  if (n.is_infinite()) return ExtendedRat::infinity();
  return ExtendedRat(Rat(n.finite()));
}

// Scalar multiple with the measure-theoretic 0 * inf = 0 convention.
inline ExtendedRat scale(const Rat& weight, const ExtendedRat& value) {
  if (weight == 0) return ExtendedRat(Rat(0));
  if (value.is_infinite()) return ExtendedRat::infinity();
  return ExtendedRat(weight * value.finite());
}

inline std::string format_extended_nat(const ExtendedNat& n) {
  return n.is_infinite() ? "inf" : std::to_string(n.finite());
}

inline std::string format_extended_rat(const ExtendedRat& v) {
  return v.is_infinite() ? "inf" : format_rat(v.finite());
}

}  // namespace culab
