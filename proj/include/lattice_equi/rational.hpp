#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lattice_equi {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed input: bad fractions, degenerate or self-intersecting
/// polygons, violated preconditions on user-supplied parameters.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q" into a canonical fraction.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

Integer floor_of(const Rational& r);
Integer ceil_of(const Rational& r);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Representative of a in [0, m), m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Narrowing conversion used for moduli and loop bounds; throws if the value
/// does not fit.
std::int64_t to_int64(const Integer& z);

}  // namespace lattice_equi
