#include "help/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "help/numtheory.hpp"

namespace help {

namespace {

// Exact quotient of a by a monic polynomial b.
IntPolynomial divide_exact(IntPolynomial a, const IntPolynomial& b) {
  const std::size_t db = b.size() - 1;
  IntPolynomial q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const Integer c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  return q;
}

// Reduction of z^e modulo Phi_n for every residue e mod n, as sparse rows.
struct ReductionTable {
  long n = 1;
  long degree = 1;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> rows;
};

std::shared_ptr<const ReductionTable> build_table(long n) {
  auto table = std::make_shared<ReductionTable>();
  table->n = n;
  const IntPolynomial phi = cyclotomic_polynomial(n);
  const std::size_t deg = phi.size() - 1;
  table->degree = static_cast<long>(deg);
  table->rows.resize(static_cast<std::size_t>(n));
  std::vector<Integer> current(deg, 0);
  if (deg > 0) current[0] = 1;
  for (long e = 0; e < n; ++e) {
    if (e > 0) {
      // multiply by z and fold the overflowing top term using z^deg = -sum phi_i z^i.
      Integer top = current[deg - 1];
      for (std::size_t i = deg - 1; i > 0; --i) current[i] = current[i - 1];
      current[0] = 0;
      if (top != 0)
        for (std::size_t i = 0; i < deg; ++i) current[i] -= top * phi[i];
    }
    auto& row = table->rows[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i < deg; ++i)
      if (current[i] != 0) row.emplace_back(i, current[i]);
  }
  return table;
}

const ReductionTable& reduction_table(long n) {
  static std::mutex lock;
  static std::map<long, std::shared_ptr<const ReductionTable>> cache;
  std::lock_guard guard(lock);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_table(n)).first;
  return *it->second;
}

void add_power(std::vector<Rational>& out, const ReductionTable& table, long e, const Rational& c) {
  if (c == 0) return;
  for (const auto& [i, v] : table.rows[static_cast<std::size_t>(mod(e, table.n))]) out[i] += c * v;
}

void require_positive(long n) {
  if (n < 1) throw std::invalid_argument("conductor must be positive, got " + std::to_string(n));
}

}  // namespace

IntPolynomial cyclotomic_polynomial(long n) {
  require_positive(n);
  IntPolynomial p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d : divisors(n))
    if (d < n) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  return p;
}

CyclotomicNumber::CyclotomicNumber() : coeffs_{Rational(0)} {}

CyclotomicNumber::CyclotomicNumber(long value) : coeffs_{Rational(value)} {}

CyclotomicNumber::CyclotomicNumber(Rational value) : coeffs_{std::move(value)} {}

CyclotomicNumber::CyclotomicNumber(long conductor, std::vector<Rational> coefficients)
    : conductor_(conductor), coeffs_(std::move(coefficients)) {
  require_positive(conductor);
  if (static_cast<long>(coeffs_.size()) != euler_phi(conductor))
    throw std::invalid_argument("coefficient vector length must equal phi(conductor)");
}

CyclotomicNumber CyclotomicNumber::root_of_unity(long n, long k) {
  const std::pair<Rational, long> term{Rational(1), k};
  return from_terms(n, std::span(&term, 1));
}

CyclotomicNumber CyclotomicNumber::from_terms(long n, std::span<const std::pair<Rational, long>> terms) {
  require_positive(n);
  const auto& table = reduction_table(n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(table.degree), 0);
  for (const auto& [c, e] : terms) add_power(coeffs, table, e, c);
  return CyclotomicNumber(n, std::move(coeffs));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational: " + to_string());
  return coeffs_[0];
}

bool CyclotomicNumber::is_integral() const {
  for (const auto& c : coeffs_)
    if (!is_integer(c)) return false;
  return true;
}

CyclotomicNumber CyclotomicNumber::embed(long N) const {
  require_positive(N);
  if (N % conductor_ != 0)
    throw std::invalid_argument("cannot embed conductor " + std::to_string(conductor_) + " into " +
                                std::to_string(N));
  if (N == conductor_) return *this;
  const auto& table = reduction_table(N);
  const long step = N / conductor_;
  std::vector<Rational> out(static_cast<std::size_t>(table.degree), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    add_power(out, table, static_cast<long>(i) * step, coeffs_[i]);
  return CyclotomicNumber(N, std::move(out));
}

CyclotomicNumber CyclotomicNumber::galois(long k) const {
  if (gcd(mod(k, conductor_), conductor_) != 1)
    throw std::invalid_argument("galois: " + std::to_string(k) + " is not coprime to conductor " +
                                std::to_string(conductor_));
  if (conductor_ <= 2) return *this;
  const auto& table = reduction_table(conductor_);
  std::vector<Rational> out(coeffs_.size(), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) add_power(out, table, static_cast<long>(i) * k, coeffs_[i]);
  return CyclotomicNumber(conductor_, std::move(out));
}

std::vector<std::pair<Rational, long>> CyclotomicNumber::terms() const {
  std::vector<std::pair<Rational, long>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(coeffs_[i], static_cast<long>(i));
  return out;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const long n = lcm(a.conductor(), b.conductor());
  CyclotomicNumber out = a.embed(n);
  const CyclotomicNumber bb = b.embed(n);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += bb.coeffs_[i];
  return out;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const Rational& r, const CyclotomicNumber& a) {
  std::vector<Rational> coeffs = a.coefficients();
  for (auto& c : coeffs) c *= r;
  return CyclotomicNumber(a.conductor(), std::move(coeffs));
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() == 1) return a.coeffs_[0] * b;
  if (b.conductor() == 1) return b.coeffs_[0] * a;
  const long n = lcm(a.conductor(), b.conductor());
  const CyclotomicNumber aa = a.embed(n), bb = b.embed(n);
  const auto& table = reduction_table(n);
  const std::size_t deg = aa.coeffs_.size();
  std::vector<Rational> product(2 * deg - 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (aa.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j)
      if (bb.coeffs_[j] != 0) product[i + j] += aa.coeffs_[i] * bb.coeffs_[j];
  }
  std::vector<Rational> out(product.begin(), product.begin() + static_cast<std::ptrdiff_t>(deg));
  for (std::size_t e = deg; e < product.size(); ++e) add_power(out, table, static_cast<long>(e), product[e]);
  return CyclotomicNumber(n, std::move(out));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor() == b.conductor()) return a.coeffs_ == b.coeffs_;
  const long n = lcm(a.conductor(), b.conductor());
  return a.embed(n).coeffs_ == b.embed(n).coeffs_;
}

std::string CyclotomicNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, e] : terms()) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) os << magnitude.get_str() << "*";
    os << "z" << conductor_;
    if (e != 1) os << "^" << e;
  }
  return first ? "0" : os.str();
}

Integer root_trace(long n, long e) {
  const long m = n / gcd(n, mod(e, n));
  Integer t = euler_phi(n) / euler_phi(m);
  return moebius(m) * t;
}

Rational trace_to_Q(const CyclotomicNumber& a) { return trace_over(a, a.conductor()); }

Rational trace_over(const CyclotomicNumber& a, long m) { return twisted_trace(a, m, 0); }

Rational twisted_trace(const CyclotomicNumber& a, long n, long t) {
  require_positive(n);
  const long big = lcm(a.conductor(), n);
  const long step = big / a.conductor();
  const long shift = mod(t, n) * (big / n);
  Rational sum = 0;
  for (const auto& [c, e] : a.terms()) sum += c * root_trace(big, e * step - shift);
  if (big != n) sum *= make_rational(euler_phi(n), euler_phi(big));
  return sum;
}

void CyclotomicSum::add(const CyclotomicNumber& value, const Rational& weight) {
  if (weight == 0) return;
  for (auto& slot : by_conductor_) {
    if (slot.conductor() == value.conductor()) {
      slot += weight * value;
      return;
    }
  }
  by_conductor_.push_back(weight * value);
}

CyclotomicNumber CyclotomicSum::value() const {
  long n = 1;
  for (const auto& v : by_conductor_) n = lcm(n, v.conductor());
  CyclotomicNumber total = CyclotomicNumber(0).embed(n);
  for (const auto& v : by_conductor_) total += v;
  return total;
}

}  // namespace help
