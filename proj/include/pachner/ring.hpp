#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace pachner {

using Rational = mpq_class;

/// Coefficient ring. Values of both rings are carried as Rational; in GF2 mode
/// every stored value is 0 or 1.
enum class Ring { GF2, Q };

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view ring_name(Ring r);
Ring parse_ring(std::string_view s);

/// Reduces an arbitrary rational into the ring. Over GF2 the value must be an
/// integer (or a rational with odd denominator) and is taken mod 2.
Rational reduce(Ring r, const Rational& x);

Rational add(Ring r, const Rational& a, const Rational& b);
Rational sub(Ring r, const Rational& a, const Rational& b);
Rational mul(Ring r, const Rational& a, const Rational& b);
Rational neg(Ring r, const Rational& a);
Rational inv(Ring r, const Rational& a);

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }

/// (-1)^e in the ring.
Rational sign_power(Ring r, long e);

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view s);

}  // namespace pachner
