#include "culab/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "culab/errors.hpp"

namespace culab {

namespace {

bool valid_integer_token(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      if (!valid_integer_token(text)) throw SchemaError("bad rational '" + text + "'");
      return Rat(Int(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!valid_integer_token(num) || !valid_integer_token(den)) {
      throw SchemaError("bad rational '" + text + "'");
    }
    Int d(den);
    if (d == 0) throw SchemaError("zero denominator in '" + text + "'");
    return Rat(Int(num), d);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception&) {
    throw SchemaError("bad rational '" + text + "'");
  }
}

std::string format_rat(const Rat& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

double to_double(const Rat& value) { return static_cast<double>(value); }

Int floor_rat(const Rat& value) {
  Int q = numerator(value) / denominator(value);
  if (value < 0 && q * denominator(value) != numerator(value)) --q;
  return q;
}

Int ceil_rat(const Rat& value) { return -floor_rat(-value); }

Rat snap_to_grid(double x, const Int& denominator) {
  if (!std::isfinite(x)) throw PreconditionError("NonFinite", "cannot snap a non-finite value");
  // Scale in binary-exact rational space, then round to the nearest integer.
  Rat exact(x);
  Rat scaled = exact * Rat(denominator);
  Int fl = floor_rat(scaled);
  Rat frac = scaled - Rat(fl);
  Int nearest = (frac * 2 >= 1) ? Int(fl + 1) : fl;
  return Rat(nearest, denominator);
}

}  // namespace culab
