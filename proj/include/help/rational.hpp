#pragma once

#include <cstdint>

#include <gmpxx.h>

namespace help {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r{Integer(static_cast<long>(num)), Integer(static_cast<long>(den))};
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const Integer& z);
/// As above, and throws std::domain_error if r is not an integer.
std::int64_t to_int64(const Rational& r);

}  // namespace help
