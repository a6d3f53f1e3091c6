#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "help/rational.hpp"

namespace help {

/// Integer polynomial, coefficients in increasing degree.
using IntPolynomial = std::vector<Integer>;

/// Phi_n, computed by exact division of x^n - 1 by Phi_d for proper divisors d of n.
IntPolynomial cyclotomic_polynomial(long n);

/// Exact element of Q(zeta_n), stored in the power basis 1, z, ..., z^(phi(n)-1) of Q[z]/(Phi_n).
///
/// The conductor is whatever the element was built with; it is never reduced. Equality
/// embeds both operands into the lcm of the conductors. Values are immutable.
class CyclotomicNumber {
 public:
  CyclotomicNumber();
  CyclotomicNumber(long value);  // NOLINT(google-explicit-constructor)
  explicit CyclotomicNumber(Rational value);
  /// Takes coefficients in the power basis of Q(zeta_n); size must equal phi(n).
  CyclotomicNumber(long conductor, std::vector<Rational> coefficients);

  /// zeta_n^k.
  static CyclotomicNumber root_of_unity(long n, long k = 1);
  /// Sum of c * zeta_n^e over the given (c, e) pairs; exponents may be any integers.
  static CyclotomicNumber from_terms(long n, std::span<const std::pair<Rational, long>> terms);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// The rational value; throws std::domain_error unless is_rational().
  Rational to_rational() const;
  /// True if every power-basis coefficient is an integer (i.e. the element lies in Z[zeta_n]).
  bool is_integral() const;

  /// Image under zeta_m -> zeta_N^(N/m); N must be a multiple of the conductor.
  CyclotomicNumber embed(long N) const;
  /// Applies zeta -> zeta^k; k must be coprime to the conductor.
  CyclotomicNumber galois(long k) const;
  CyclotomicNumber conj() const { return galois(-1); }

  /// Nonzero power-basis terms as (coefficient, exponent).
  std::vector<std::pair<Rational, long>> terms() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

  CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

  std::string to_string() const;

 private:
  long conductor_ = 1;
  std::vector<Rational> coeffs_;
};

CyclotomicNumber operator*(const Rational& r, const CyclotomicNumber& a);

/// Tr_{Q(zeta_n)/Q}(zeta_n^e) = mu(m) * phi(n) / phi(m) with m = n / gcd(n, e).
Integer root_trace(long n, long e);

/// Absolute trace from the conductor's field, via root_trace on each power-basis term.
Rational trace_to_Q(const CyclotomicNumber& a);

/// Tr_{Q(zeta_m)/Q}(a) for an element known to lie in Q(zeta_m), whatever its stored conductor.
Rational trace_over(const CyclotomicNumber& a, long m);

/// Tr_{Q(zeta_n)/Q}(a * zeta_n^(-t)) for a in Q(zeta_n). Linear in a; no field multiplication.
Rational twisted_trace(const CyclotomicNumber& a, long n, long t);

/// Accumulates values of different conductors; they are only embedded into a common
/// field once, when the sum is read.
class CyclotomicSum {
 public:
  void add(const CyclotomicNumber& value, const Rational& weight = 1);
  CyclotomicNumber value() const;

 private:
  std::vector<CyclotomicNumber> by_conductor_;
};

}  // namespace help
