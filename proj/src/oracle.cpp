#include "help/oracle.hpp"

#include <numeric>
#include <stdexcept>

namespace help::oracle {

namespace {

using Poly = std::vector<Rational>;

long gcd_long(long a, long b) { return std::gcd(a, b); }

long mod_long(long a, long n) {
  const long r = a % n;
  return r < 0 ? r + n : r;
}

// x^n - 1 divided by Phi_d for every proper divisor d, by plain long division.
Poly phi(long n) {
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const Poly q = phi(d);
    const std::size_t dq = q.size() - 1;
    Poly quotient(p.size() - dq, 0);
    for (std::size_t i = p.size() - 1; i >= dq; --i) {
      const Rational c = p[i];
      quotient[i - dq] = c;
      for (std::size_t j = 0; j <= dq; ++j) p[i - dq + j] -= c * q[j];
    }
    p = quotient;
  }
  return p;
}

// Remainder of p modulo the monic polynomial q.
Poly reduce(Poly p, const Poly& q) {
  const std::size_t k = q.size() - 1;
  for (std::size_t i = p.size(); i-- > k;) {
    const Rational c = p[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= k; ++j) p[i - k + j] -= c * q[j];
  }
  p.resize(std::min(p.size(), k));
  return p;
}

// Coefficients of a over the exponents 0..m-1 of zeta_m, conductor of a dividing m.
Poly spread(const CyclotomicNumber& a, long m) {
  const long n = a.conductor();
  if (m % n != 0) throw std::invalid_argument("conductor does not divide the target field");
  Poly out(static_cast<std::size_t>(m), 0);
  const auto& c = a.coefficients();
  for (std::size_t e = 0; e < c.size(); ++e) out[static_cast<std::size_t>(static_cast<long>(e) * (m / n))] += c[e];
  return out;
}

Rational galois_sum(const Poly& a, long m) {
  Poly sum(static_cast<std::size_t>(m), 0);
  for (long k = 1; k <= m; ++k) {
    if (gcd_long(k, m) != 1) continue;
    for (long e = 0; e < m; ++e) sum[static_cast<std::size_t>(mod_long(e * k, m))] += a[static_cast<std::size_t>(e)];
  }
  const Poly r = reduce(sum, phi(m));
  for (std::size_t i = 1; i < r.size(); ++i)
    if (r[i] != 0) throw std::logic_error("Galois sum is not rational");
  return r.empty() ? Rational(0) : r[0];
}

}  // namespace

Rational trace_bruteforce(const CyclotomicNumber& a) {
  return galois_sum(spread(a, a.conductor()), a.conductor());
}

Rational twisted_trace_bruteforce(const CyclotomicNumber& a, long m, long t) {
  const Poly p = spread(a, m);
  Poly shifted(static_cast<std::size_t>(m), 0);
  for (long e = 0; e < m; ++e) shifted[static_cast<std::size_t>(mod_long(e - t, m))] += p[static_cast<std::size_t>(e)];
  return galois_sum(shifted, m);
}

AuditReport mu_group_element_audit(const CharacterTable& table) {
  AuditReport report;
  std::vector<const Character*> chars;
  for (const auto& chi : table.ordinary) chars.push_back(&chi);
  for (const auto& block : table.brauer)
    for (const auto& phi : block.characters) chars.push_back(&phi);

  for (std::size_t g = 0; g < table.class_count(); ++g) {
    const long n = table.classes[g].element_order;
    for (const Character* psi : chars) {
      if (psi->kind == CharacterKind::brauer && n % psi->prime == 0) continue;
      const Rational degree = psi->values[table.identity_class()].to_rational();
      Rational total = 0;
      for (long t = 0; t < n; ++t) {
        Rational mu = 0;
        for (long d = 1; d <= n; ++d) {
          if (n % d != 0) continue;
          const std::size_t gd = table.class_of_power(g, d);
          mu += twisted_trace_bruteforce(psi->values[gd], n / d, t);
        }
        mu /= n;
        mu.canonicalize();
        ++report.checked;
        total += mu;
        if (mu.get_den() != 1 || mu < 0)
          report.violations.push_back({table.classes[g].id, psi->name, t, mu, "multiplicity is not a nonnegative integer"});
      }
      if (total != degree)
        report.violations.push_back({table.classes[g].id, psi->name, -1, total, "multiplicities do not sum to the degree"});
    }
  }
  return report;
}

std::vector<IntegerPoint> box_scan(const ConstraintSystem& system, const VariableBox& box, double cap) {
  const std::size_t k = box.size();
  double volume = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (box.lower[i] > box.upper[i]) return {};
    volume *= static_cast<double>(box.upper[i] - box.lower[i] + 1);
  }
  if (volume > cap) throw std::length_error("box_scan: box has " + std::to_string(volume) + " points");
  std::vector<IntegerPoint> out;
  IntegerPoint point(box.lower);
  while (true) {
    if (first_violated_row(system, point) < 0) out.push_back(point);
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (point[i] < box.upper[i]) {
        ++point[i];
        break;
      }
      point[i] = box.lower[i];
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

long first_violated_row(const ConstraintSystem& system, std::span<const std::int64_t> point) {
  for (std::size_t r = 0; r < system.rows.size(); ++r) {
    const auto& row = system.rows[r];
    Integer v = static_cast<long>(row.constant);
    for (std::size_t j = 0; j < point.size(); ++j) v += Integer(static_cast<long>(row.coefficients[j])) * static_cast<long>(point[j]);
    bool ok = true;
    if (row.lower && v < static_cast<long>(*row.lower)) ok = false;
    if (row.upper && v > static_cast<long>(*row.upper)) ok = false;
    if (row.modulus > 1 && mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(row.modulus)) == 0) ok = false;
    if (!ok) return static_cast<long>(r);
  }
  return -1;
}

}  // namespace help::oracle
