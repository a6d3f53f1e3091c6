#include <doctest.h>

#include <random>

#include "help/cyclo.hpp"
#include "help/numtheory.hpp"
#include "help/oracle.hpp"
#include "support.hpp"

using namespace help;

namespace {

CyclotomicNumber z(long n, long k = 1) { return CyclotomicNumber::root_of_unity(n, k); }

IntPolynomial poly(std::initializer_list<long> c) {
  IntPolynomial p;
  for (long x : c) p.emplace_back(x);
  return p;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == poly({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_polynomial(12) == poly({1, 0, -1, 0, 1}));
}

TEST_CASE("Phi_n vanishes at zeta_n") {
  for (long n = 1; n <= 60; ++n) {
    const auto phi = cyclotomic_polynomial(n);
    CyclotomicNumber sum;
    for (std::size_t i = 0; i < phi.size(); ++i) sum += CyclotomicNumber(Rational(phi[i])) * z(n, static_cast<long>(i));
    CHECK_MESSAGE(sum.is_zero(), "n = " << n);
  }
}

TEST_CASE("ring operations") {
  CHECK(z(4) * z(4) == CyclotomicNumber(-1));
  CHECK(z(3) + z(3, 2) == CyclotomicNumber(-1));
  CHECK((z(5) + z(5, 4)) * (z(5, 2) + z(5, 3)) == CyclotomicNumber(-1));
  CHECK(-z(7) + z(7) == CyclotomicNumber(0));
  CHECK(z(3) == z(6, 2));
  CHECK(z(4) != z(4, 3));
  CHECK(CyclotomicNumber(make_rational(1, 2)) * CyclotomicNumber(2) == CyclotomicNumber(1));
  // mixed conductors meet in the lcm
  CHECK((z(3) * z(4)).conductor() == 12);
  CHECK(z(3) * z(4) == z(12, 7));
}

TEST_CASE("embed") {
  CHECK(CyclotomicNumber(-1).embed(2).embed(4) == z(4, 2));
  CHECK(z(3).embed(6) == z(6, 2));
  const auto a = (z(3) + CyclotomicNumber(1)).embed(12);
  CHECK(a.conductor() == 12);
  CHECK(a == z(12, 4) + CyclotomicNumber(1));
  CHECK_THROWS(z(3).embed(4));
}

TEST_CASE("galois") {
  CHECK(z(5).galois(2) == z(5, 2));
  CHECK((z(5) + z(5, -1)).galois(-1) == z(5) + z(5, -1));
  CHECK((z(7) + z(7, 2) + z(7, 4)).galois(3) == z(7, 3) + z(7, 6) + z(7, 5));
  CHECK_THROWS(z(6).galois(3));
}

TEST_CASE("rational detection and integrality") {
  CHECK((z(3) + z(3, 2)).is_rational());
  CHECK((z(3) + z(3, 2)).to_rational() == -1);
  CHECK_FALSE(z(4).is_rational());
  CHECK_THROWS_AS(z(4).to_rational(), std::domain_error);
  CHECK((z(5) + z(5, 2)).is_integral());
  CHECK_FALSE(CyclotomicNumber(make_rational(1, 2)).is_integral());
}

TEST_CASE("trace") {
  CHECK(trace_to_Q(CyclotomicNumber(1).embed(4)) == 2);
  CHECK(trace_to_Q(z(4)) == 0);
  CHECK(trace_to_Q(z(9, 3)) == -3);
  CHECK(trace_over(z(3), 6) == -1);
  CHECK(trace_over(CyclotomicNumber(1), 12) == 4);
  CHECK(twisted_trace(z(8), 8, 1) == 4);
  CHECK(twisted_trace(z(8), 8, 0) == 0);
}

TEST_CASE("closed-form root traces at prime powers") {
  // r^(k-1)(r-1) if zeta^l = 1, -r^(k-1) if zeta^l != 1 but zeta^(lr) = 1, else 0.
  for (long n = 2; n <= 243; ++n) {
    long r = 0;
    int k = 0;
    if (!is_prime_power(n, &r, &k)) continue;
    const long top = n / r;
    for (long l = 0; l < n; ++l) {
      long expected = 0;
      if (l % n == 0)
        expected = top * (r - 1);
      else if ((l * r) % n == 0)
        expected = -top;
      CHECK(root_trace(n, l) == expected);
      if (n <= 81) CHECK(oracle::trace_bruteforce(z(n, l)) == expected);
    }
  }
}

TEST_CASE("randomized field properties") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> cond(1, 60);
  for (int iter = 0; iter < 200; ++iter) {
    const long n = cond(rng);
    const auto a = testing::random_cyclotomic(rng, n);
    const auto b = testing::random_cyclotomic(rng, n);
    const auto c = testing::random_cyclotomic(rng, cond(rng));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == CyclotomicNumber(0));
    const long N = n * std::uniform_int_distribution<long>(1, 4)(rng);
    CHECK(a.embed(N) == a);
    CHECK((a.embed(N) == b.embed(N)) == (a == b));
    std::vector<long> units;
    for (long k = 1; k < n || k == 1; ++k)
      if (gcd(k, n) == 1) units.push_back(k);
    const long k1 = units[rng() % units.size()], k2 = units[rng() % units.size()];
    CHECK(a.galois(k1).galois(k2) == a.galois(mod(k1 * k2, n)));
  }
}

TEST_CASE("fast trace agrees with the Galois sum") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> cond(1, 60);
  for (int iter = 0; iter < 300; ++iter) {
    const auto a = testing::random_cyclotomic(rng, cond(rng));
    CHECK(trace_to_Q(a) == oracle::trace_bruteforce(a));
    const long m = a.conductor() * std::uniform_int_distribution<long>(1, 3)(rng);
    const long t = std::uniform_int_distribution<long>(0, m - 1)(rng);
    CHECK(twisted_trace(a, m, t) == oracle::twisted_trace_bruteforce(a, m, t));
  }
}

TEST_CASE("sums across conductors") {
  CyclotomicSum s;
  s.add(z(3));
  s.add(z(4), 2);
  s.add(CyclotomicNumber(5));
  CHECK(s.value() == z(3) + CyclotomicNumber(2) * z(4) + CyclotomicNumber(5));
}
