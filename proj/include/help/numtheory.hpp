#pragma once

#include <vector>

namespace help {

long gcd(long a, long b);
long lcm(long a, long b);
long mod(long a, long m);  // representative in [0, m)
long euler_phi(long n);
int moebius(long n);
bool is_prime(long n);
std::vector<long> prime_factors(long n);  // distinct, ascending
std::vector<long> divisors(long n);       // ascending, includes 1 and n
bool is_prime_power(long n, long* prime = nullptr, int* exponent = nullptr);
/// Multiplicative inverse of a modulo m; requires gcd(a, m) = 1.
long inverse_mod(long a, long m);

}  // namespace help
