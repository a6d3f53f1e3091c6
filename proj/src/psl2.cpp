#include "help/psl2.hpp"

#include <stdexcept>
#include <string>

#include "help/numtheory.hpp"

namespace help {

namespace {

std::string a_label(long l) { return "a" + std::to_string(l); }
std::string b_label(long m) { return "b" + std::to_string(m); }

// zeta_n^k written in the conductor of its actual order.
CyclotomicNumber root(long n, long k) {
  const long g = gcd(n, mod(k, n));
  return CyclotomicNumber::root_of_unity(n / g, mod(k, n) / g);
}

// zeta_n^k + zeta_n^-k in the smallest cyclotomic field containing zeta_n^k.
CyclotomicNumber two_cos(long n, long k) { return root(n, k) + root(n, -k); }

bool is_square_mod_p(long r, long p) {
  const long a = mod(r, p);
  for (long x = 1; x < p; ++x)
    if (x * x % p == a) return true;
  return false;
}

// Index in [0, order) folded onto the representative range 1..order/2 used for labels.
long fold(long k, long order) {
  k = mod(k, order);
  return k > order / 2 ? order - k : k;
}

// sqrt(epsilon * q), exactly, in Q(zeta_p).
CyclotomicNumber sqrt_epsilon_q(const Psl2Parameters& par) {
  long scale = 1;
  for (long i = 0; i < par.f / 2; ++i) scale *= par.p;
  if (par.f % 2 == 0) return CyclotomicNumber(scale);
  std::vector<std::pair<Rational, long>> gauss;
  for (long i = 1; i < par.p; ++i) gauss.emplace_back(is_square_mod_p(i, par.p) ? scale : -scale, i);
  return CyclotomicNumber::from_terms(par.p, gauss);
}

}  // namespace

Psl2Parameters psl2_parameters(long p, long f) {
  if (p == 2) throw std::invalid_argument("PSL(2,q) generation needs odd q; p = 2 is not supported");
  if (!is_prime(p)) throw std::invalid_argument("p = " + std::to_string(p) + " is not a prime");
  if (f < 1) throw std::invalid_argument("f must be positive");
  Psl2Parameters par;
  par.p = p;
  par.f = f;
  par.q = 1;
  for (long i = 0; i < f; ++i) par.q *= p;
  if (par.q < 5) throw std::invalid_argument("q = " + std::to_string(par.q) + " is smaller than 5");
  par.epsilon = par.q % 4 == 1 ? 1 : -1;
  par.order_a = (par.q - 1) / 2;
  par.order_b = (par.q + 1) / 2;
  return par;
}

CharacterTable generate_ordinary(const Psl2Parameters& par) {
  const long q = par.q;
  const int eps = par.epsilon;
  const long L = par.a_class_count(), M = par.b_class_count();

  CharacterTable t;
  t.name = "PSL(2," + std::to_string(q) + ")";
  t.order = par.group_order();
  t.exponent = lcm(par.p, lcm(par.order_a, par.order_b));
  t.classes.push_back({"1a", 1, t.order});
  t.classes.push_back({"pc", par.p, 0});
  t.classes.push_back({"pd", par.p, 0});
  for (long l = 1; l <= L; ++l) t.classes.push_back({a_label(l), par.order_a / gcd(par.order_a, l), 0});
  for (long m = 1; m <= M; ++m) t.classes.push_back({b_label(m), par.order_b / gcd(par.order_b, m), 0});
  const std::size_t a0 = 3, b0 = 3 + static_cast<std::size_t>(L);

  auto add = [&](std::string name, auto value_at) {
    Character chi;
    chi.name = std::move(name);
    chi.values.push_back(value_at('1', 0));
    chi.values.push_back(value_at('c', 0));
    chi.values.push_back(value_at('d', 0));
    for (long l = 1; l <= L; ++l) chi.values.push_back(value_at('a', l));
    for (long m = 1; m <= M; ++m) chi.values.push_back(value_at('b', m));
    t.ordinary.push_back(std::move(chi));
  };

  add("1", [](char, long) { return CyclotomicNumber(1); });
  add("psi", [&](char kind, long) -> CyclotomicNumber {
    switch (kind) {
      case '1': return CyclotomicNumber(q);
      case 'a': return CyclotomicNumber(1);
      case 'b': return CyclotomicNumber(-1);
      default: return CyclotomicNumber(0);
    }
  });
  for (long i = 1; i <= par.chi_count(); ++i)
    add("chi" + std::to_string(i), [&](char kind, long l) -> CyclotomicNumber {
      switch (kind) {
        case '1': return CyclotomicNumber(q + 1);
        case 'a': return two_cos(par.order_a, i * l);
        case 'b': return CyclotomicNumber(0);
        default: return CyclotomicNumber(1);
      }
    });
  for (long j = 1; j <= par.theta_count(); ++j)
    add("theta" + std::to_string(j), [&](char kind, long m) -> CyclotomicNumber {
      switch (kind) {
        case '1': return CyclotomicNumber(q - 1);
        case 'a': return CyclotomicNumber(0);
        case 'b': return -two_cos(par.order_b, j * m);
        default: return CyclotomicNumber(-1);
      }
    });
  const CyclotomicNumber root_eq = sqrt_epsilon_q(par);
  const Rational half = make_rational(1, 2);
  const CyclotomicNumber plus = half * (CyclotomicNumber(eps) + root_eq);
  const CyclotomicNumber minus = half * (CyclotomicNumber(eps) - root_eq);
  for (int which = 1; which <= 2; ++which)
    add("eta" + std::to_string(which), [&](char kind, long k) -> CyclotomicNumber {
      const long sign = k % 2 == 0 ? 1 : -1;
      switch (kind) {
        case '1': return CyclotomicNumber((q + eps) / 2);
        case 'c': return which == 1 ? plus : minus;
        case 'd': return which == 1 ? minus : plus;
        case 'a': return CyclotomicNumber(eps == 1 ? sign : 0);
        // Orthogonality forces -(-1)^m here: eta has value 1 on elements of order 4 when q = 7.
        default: return CyclotomicNumber(eps == -1 ? -sign : 0);
      }
    });

  // Centralizer orders from column orthogonality.
  for (std::size_t x = 0; x < t.classes.size(); ++x) {
    CyclotomicSum sum;
    for (const auto& chi : t.ordinary) sum.add(chi.values[x] * chi.values[x].conj());
    t.classes[x].centralizer_order = to_int64(sum.value().to_rational());
  }

  for (long r : prime_factors(t.exponent)) {
    std::vector<std::size_t> image(t.classes.size());
    image[0] = 0;
    const bool square = par.f % 2 == 0 || is_square_mod_p(r, par.p);
    image[1] = r == par.p ? 0 : (square ? 1 : 2);
    image[2] = r == par.p ? 0 : (square ? 2 : 1);
    for (long l = 1; l <= L; ++l) {
      const long k = fold(l * r, par.order_a);
      image[a0 + static_cast<std::size_t>(l - 1)] = k == 0 ? 0 : a0 + static_cast<std::size_t>(k - 1);
    }
    for (long m = 1; m <= M; ++m) {
      const long k = fold(m * r, par.order_b);
      image[b0 + static_cast<std::size_t>(m - 1)] = k == 0 ? 0 : b0 + static_cast<std::size_t>(k - 1);
    }
    t.power_maps[r] = std::move(image);
  }
  return t;
}

BrauerBlock generate_brauer_defining(const Psl2Parameters& par, const CharacterTable& table) {
  BrauerBlock block;
  block.prime = par.p;
  for (std::size_t x = 0; x < table.class_count(); ++x)
    if (table.classes[x].element_order % par.p != 0) block.regular_classes.push_back(x);

  // Steinberg: the irreducibles are the products over i of the Frobenius twists Sym^(k_i)^(p^i),
  // 0 <= k_i < p; they factor through PSL when sum k_i is even. An element whose preimage has
  // eigenvalues lambda^(+-1) gets prod_i sum_j lambda^(p^i (k_i - 2j)).
  std::vector<long> k(static_cast<std::size_t>(par.f), 0);
  auto value_at = [&](long order, long e) {
    // lambda^2 is the e-th power of a primitive order-th root, so lambda^E = root(order, e * E / 2)
    std::vector<long> exponents{0};
    long pi = 1;
    for (long ki : k) {
      std::vector<long> next;
      for (long base : exponents)
        for (long j = 0; j <= ki; ++j) next.push_back(base + pi * (ki - 2 * j));
      exponents = std::move(next);
      pi *= par.p;
    }
    CyclotomicNumber sum;
    for (long E : exponents) sum += root(order, e * (E / 2));
    return sum;
  };
  while (true) {
    long parity = 0, degree = 1;
    for (long ki : k) parity += ki, degree *= ki + 1;
    if (parity % 2 == 0) {
      Character phi;
      if (par.f == 1) {
        phi.name = "phi" + std::to_string(degree);
      } else {
        phi.name = "phi[";
        for (std::size_t i = 0; i < k.size(); ++i) phi.name += (i ? "," : "") + std::to_string(k[i]);
        phi.name += "]";
      }
      phi.kind = CharacterKind::brauer;
      phi.prime = par.p;
      phi.values.assign(table.class_count(), CyclotomicNumber(0));
      for (std::size_t x : block.regular_classes) {
        const auto& id = table.classes[x].id;
        if (id == "1a")
          phi.values[x] = CyclotomicNumber(degree);
        else if (id[0] == 'a')
          phi.values[x] = value_at(par.order_a, std::stol(id.substr(1)));
        else
          phi.values[x] = value_at(par.order_b, std::stol(id.substr(1)));
      }
      block.characters.push_back(std::move(phi));
    }
    std::size_t i = 0;
    while (i < k.size() && k[i] == par.p - 1) k[i++] = 0;
    if (i == k.size()) break;
    ++k[i];
  }
  return block;
}

CharacterTable generate_psl2(long p, long f, bool with_brauer) {
  const auto par = psl2_parameters(p, f);
  CharacterTable t = generate_ordinary(par);
  if (with_brauer) t.brauer.push_back(generate_brauer_defining(par, t));
  t.validate();
  return t;
}

}  // namespace help
