#pragma once

// Brute-force group models used as independent references.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "help/chartab.hpp"
#include "help/cyclo.hpp"
#include "help/fixtures.hpp"
#include "help/numtheory.hpp"
#include "help/psl2.hpp"
#include <set>

namespace testing {

using Perm = std::array<int, 5>;

inline Perm compose(const Perm& a, const Perm& b) {  // a after b
  Perm c{};
  for (int i = 0; i < 5; ++i) c[i] = a[b[i]];
  return c;
}

inline Perm power(const Perm& a, long k) {
  Perm r{0, 1, 2, 3, 4};
  for (long i = 0; i < k; ++i) r = compose(a, r);
  return r;
}

inline std::vector<int> cycle_type(const Perm& p) {
  std::vector<int> out;
  std::array<bool, 5> seen{};
  for (int i = 0; i < 5; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    out.push_back(len);
  }
  std::sort(out.rbegin(), out.rend());
  return out;
}

// Class labels of the fixture, by cycle type.
inline std::string s5_label(const Perm& p) {
  static const std::map<std::vector<int>, std::string> names{
      {{1, 1, 1, 1, 1}, "1a"}, {{2, 2, 1}, "2a"}, {{3, 1, 1}, "3a"}, {{5}, "5a"},
      {{2, 1, 1, 1}, "2b"},    {{4, 1}, "4a"},    {{3, 2}, "6a"}};
  return names.at(cycle_type(p));
}

inline std::vector<Perm> s5_elements() {
  std::vector<Perm> out;
  Perm p{0, 1, 2, 3, 4};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int sign(const Perm& p) {
  int s = 1;
  for (int len : cycle_type(p)) s *= (len % 2 == 0) ? -1 : 1;
  return s;
}

inline int fixed_points(const Perm& p) {
  int f = 0;
  for (int i = 0; i < 5; ++i) f += p[i] == i;
  return f;
}

// PSL(2,p) as 2x2 matrices over F_p modulo +-1.
struct Mat {
  long a, b, c, d;
  auto operator<=>(const Mat&) const = default;
};

struct Psl2Model {
  long p;
  std::vector<Mat> elements;

  Mat norm(Mat m) const {
    auto md = [&](long x) { return ((x % p) + p) % p; };
    m = {md(m.a), md(m.b), md(m.c), md(m.d)};
    const Mat neg{md(-m.a), md(-m.b), md(-m.c), md(-m.d)};
    return std::min(m, neg);
  }
  Mat mul(const Mat& x, const Mat& y) const {
    return norm({x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d});
  }
  Mat inv(const Mat& x) const { return norm({x.d, -x.b, -x.c, x.a}); }
  Mat identity() const { return norm({1, 0, 0, 1}); }
  Mat pow(Mat x, long k) const {
    Mat r = identity();
    for (long i = 0; i < k; ++i) r = mul(r, x);
    return r;
  }
  long order(const Mat& x) const {
    long k = 1;
    for (Mat y = x; y != identity(); y = mul(y, x)) ++k;
    return k;
  }

  explicit Psl2Model(long prime) : p(prime) {
    std::vector<Mat> all;
    for (long a = 0; a < p; ++a)
      for (long b = 0; b < p; ++b)
        for (long c = 0; c < p; ++c)
          for (long d = 0; d < p; ++d)
            if (((a * d - b * c) % p + p) % p == 1) all.push_back(norm({a, b, c, d}));
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    elements = std::move(all);
  }

  std::vector<Mat> conjugacy_class(const Mat& x) const {
    std::vector<Mat> out;
    for (const auto& g : elements) out.push_back(mul(mul(g, x), inv(g)));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool conjugate(const Mat& x, const Mat& y) const {
    const auto cls = conjugacy_class(x);
    return std::binary_search(cls.begin(), cls.end(), y);
  }

  // (element order, class size) for every class.
  std::multiset<std::pair<long, long>> class_data() const {
    std::multiset<std::pair<long, long>> out;
    std::vector<Mat> done;
    for (const auto& x : elements) {
      if (std::binary_search(done.begin(), done.end(), x)) continue;
      const auto cls = conjugacy_class(x);
      out.insert({order(x), static_cast<long>(cls.size())});
      done.insert(done.end(), cls.begin(), cls.end());
      std::sort(done.begin(), done.end());
    }
    return out;
  }
};

inline bool legendre_square(long r, long p) {
  r = ((r % p) + p) % p;
  for (long x = 1; x < p; ++x)
    if (x * x % p == r) return true;
  return false;
}

inline help::CyclotomicNumber random_cyclotomic(std::mt19937& rng, long conductor) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  std::vector<help::Rational> c;
  for (long i = 0; i < help::euler_phi(conductor); ++i) c.push_back(help::make_rational(num(rng), den(rng)));
  return help::CyclotomicNumber(conductor, std::move(c));
}

}  // namespace testing
