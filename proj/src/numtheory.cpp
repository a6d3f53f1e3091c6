#include "help/numtheory.hpp"
#include "help/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace help {

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
  return z.get_si();
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("expected an integer, got " + r.get_str());
  return to_int64(r.get_num());
}

long gcd(long a, long b) { return std::gcd(a, b); }

long lcm(long a, long b) { return std::lcm(a, b); }

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

long euler_phi(long n) {
  long result = n;
  for (long p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

int moebius(long n) {
  int sign = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> prime_factors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

bool is_prime_power(long n, long* prime, int* exponent) {
  auto ps = prime_factors(n);
  if (ps.size() != 1) return false;
  int k = 0;
  for (long m = n; m > 1; m /= ps[0]) ++k;
  if (prime) *prime = ps[0];
  if (exponent) *exponent = k;
  return true;
}

long inverse_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, r = mod(a, m);
  while (r != 0) {
    long q = g / r;
    long t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1) throw std::invalid_argument("inverse_mod: arguments not coprime");
  return mod(x, m);
}

}  // namespace help
