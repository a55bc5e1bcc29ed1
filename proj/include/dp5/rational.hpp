#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace dp5 {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is malformed or violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size bound (e.g. splitting-tower degree) was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

/// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& r);

/// Parses "n" or "n/d" (optional leading sign). Throws InvalidInput.
Rational parse_rational(std::string_view text);

/// True iff r = s^2 for some rational s.
bool is_square_rational(const Rational& r);

/// Exact square root; precondition is_square_rational(r).
Rational sqrt_rational(const Rational& r);

/// Squarefree integer d with r = d * s^2 for rational s (0 for r = 0).
Integer squarefree_class(const Rational& r);

Integer lcm_denominators_range(const Rational* begin, const Rational* end);

}  // namespace dp5
