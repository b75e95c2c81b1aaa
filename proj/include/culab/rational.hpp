#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace culab {

// All exact arithmetic in the library runs on arbitrary-precision rationals;
// nothing downstream of the spectral snap ever touches floating point.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Parses "p/q" or a bare integer "p". Throws SchemaError on anything else
// (including q == 0).
Rat parse_rat(const std::string& text);

// Canonical serialization, always with an explicit denominator: "3/4", "5/1".
std::string format_rat(const Rat& value);

double to_double(const Rat& value);

Int floor_rat(const Rat& value);
Int ceil_rat(const Rat& value);

// Nearest multiple of 1/denominator (ties away from zero). Used to move
// floating-point spectra onto the exact rational grid.
Rat snap_to_grid(double x, const Int& denominator);

inline const Rat& min_rat(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max_rat(const Rat& a, const Rat& b) { return a < b ? b : a; }
inline Rat abs_rat(const Rat& a) { return a < 0 ? Rat(-a) : a; }

}  // namespace culab
