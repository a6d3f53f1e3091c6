#include "help/engine.hpp"

#include <algorithm>
#include <stdexcept>

#include "help/numtheory.hpp"

namespace help {

using nlohmann::json;
using nlohmann::ordered_json;

const PartialAugmentationTuple& Tower::at(long m) const {
  auto it = tuples.find(m);
  if (it == tuples.end())
    throw std::invalid_argument("incomplete tower: no tuple of order " + std::to_string(m) + " in a tower of order " +
                                std::to_string(order));
  return it->second;
}

bool Tower::is_trivial() const {
  return std::all_of(tuples.begin(), tuples.end(), [](const auto& kv) { return kv.second.is_basis_vector(); });
}

Tower element_tower(const CharacterTable& table, std::size_t g) {
  Tower tower;
  tower.order = table.classes[g].element_order;
  for (long m : divisors(tower.order))
    if (m > 1)
      tower.tuples[m] = PartialAugmentationTuple::basis(m, table.class_count(), table.class_of_power(g, tower.order / m));
  return tower;
}

std::vector<std::size_t> allowed_classes(const CharacterTable& table, long n) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < table.class_count(); ++x) {
    const long ord = table.classes[x].element_order;
    if (n % ord != 0 || ord == 1) continue;
    if (table.is_central(x) && ord != n) continue;
    out.push_back(x);
  }
  return out;
}

LutharPassi::LutharPassi(const CharacterTable& table) : table_(table) {}

const std::vector<std::int64_t>& LutharPassi::traces(const Character& psi, long m) {
  const auto key = std::make_pair(&psi, m);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  if (psi.kind == CharacterKind::brauer && m % psi.prime == 0)
    throw std::invalid_argument("Brauer character " + psi.name + " used for order " + std::to_string(m) +
                                " divisible by " + std::to_string(psi.prime));
  const auto k = table_.class_count();
  std::vector<std::int64_t> out(k * static_cast<std::size_t>(m), 0);
  for (std::size_t x = 0; x < k; ++x) {
    if (m % table_.classes[x].element_order != 0) continue;
    for (long t = 0; t < m; ++t)
      out[x * static_cast<std::size_t>(m) + static_cast<std::size_t>(t)] = to_int64(twisted_trace(psi.values[x], m, t));
  }
  return cache_.emplace(key, std::move(out)).first->second;
}

std::int64_t LutharPassi::scaled_b(const Character& psi, std::size_t x, long n, long t) {
  if (n % table_.classes[x].element_order != 0)
    throw std::invalid_argument("class " + table_.classes[x].id + " has order not dividing " + std::to_string(n));
  return traces(psi, n)[x * static_cast<std::size_t>(n) + static_cast<std::size_t>(mod(t, n))];
}

std::int64_t LutharPassi::scaled_a(const Character& psi, const Tower& tower, long t) {
  const long n = tower.order;
  const std::size_t one = table_.identity_class();
  std::int64_t sum = 0;
  for (long d : divisors(n)) {
    if (d == 1) continue;
    const long m = n / d;
    if (m == 1) {
      sum += scaled_b(psi, one, 1, 0);
      continue;
    }
    const auto& tuple = tower.at(m);
    const auto& tr = traces(psi, m);
    const long s = mod(t, m);
    for (std::size_t x = 0; x < tuple.entries.size(); ++x)
      if (tuple.entries[x] != 0) sum += tuple.entries[x] * tr[x * static_cast<std::size_t>(m) + static_cast<std::size_t>(s)];
  }
  return sum;
}

std::int64_t LutharPassi::scaled_mu(const Character& psi, const Tower& tower, long t) {
  std::int64_t sum = scaled_a(psi, tower, t);
  const auto& top = tower.top();
  for (std::size_t x = 0; x < top.entries.size(); ++x)
    if (top.entries[x] != 0) sum += top.entries[x] * scaled_b(psi, x, tower.order, t);
  return sum;
}

std::vector<const Character*> LutharPassi::characters(long n, const std::set<long>& brauer_primes) const {
  std::vector<const Character*> out;
  for (const auto& chi : table_.ordinary) out.push_back(&chi);
  for (const auto& block : table_.brauer) {
    if (!brauer_primes.contains(block.prime) || n % block.prime == 0) continue;
    for (const auto& phi : block.characters) out.push_back(&phi);
  }
  return out;
}

Rational coeff_b(const CharacterTable& table, const Character& psi, std::size_t x, long n, long t) {
  LutharPassi lp(table);
  return make_rational(lp.scaled_b(psi, x, n, t), n);
}

Rational coeff_a(const CharacterTable& table, const Character& psi, const Tower& tower, long t) {
  LutharPassi lp(table);
  return make_rational(lp.scaled_a(psi, tower, t), tower.order);
}

Rational multiplicity(const CharacterTable& table, const Character& psi, const Tower& tower, long t) {
  LutharPassi lp(table);
  return make_rational(lp.scaled_mu(psi, tower, t), tower.order);
}

std::vector<ConstraintRow> congruence_rows(const CharacterTable& table, long n, const std::vector<std::size_t>& variables) {
  std::vector<ConstraintRow> rows;
  auto level_row = [&](long r, long level_order) {
    ConstraintRow row;
    row.kind = RowKind::congruence;
    row.modulus = r;
    bool any = false;
    for (std::size_t x : variables) {
      const bool on = table.classes[x].element_order == level_order;
      row.coefficients.push_back(on ? 1 : 0);
      any = any || on;
    }
    if (any) rows.push_back(std::move(row));
  };
  long r = 0;
  int k = 0;
  if (is_prime_power(n, &r, &k)) {
    long level = r;
    for (int m = 1; m < k; ++m, level *= r) level_row(r, level);
  } else {
    for (long p : prime_factors(n)) level_row(p, p);
  }
  return rows;
}

std::set<long> usable_brauer_primes(const CharacterTable& table, long n, bool use_brauer) {
  std::set<long> out;
  if (!use_brauer) return out;
  for (const auto& block : table.brauer)
    if (n % block.prime != 0) out.insert(block.prime);
  return out;
}

ConstraintSystem build_system(LutharPassi& lp, const Tower& base, const std::set<long>& brauer_primes) {
  const auto& table = lp.table();
  const long n = base.order;
  for (long p : brauer_primes) {
    if (n % p == 0)
      throw std::invalid_argument("Brauer characters mod " + std::to_string(p) + " requested for order " + std::to_string(n));
    if (!table.block(p)) throw std::invalid_argument("table has no Brauer block mod " + std::to_string(p));
  }
  ConstraintSystem sys;
  sys.order = n;
  sys.variables = allowed_classes(table, n);
  for (std::size_t x : sys.variables) sys.variable_ids.push_back(table.classes[x].id);

  std::set<std::vector<std::int64_t>> seen;
  auto push_unique = [&](ConstraintRow row) {
    std::vector<std::int64_t> key{row.constant, row.modulus, row.lower.value_or(INT64_MIN), row.upper.value_or(INT64_MAX),
                                  static_cast<std::int64_t>(row.lower.has_value()),
                                  static_cast<std::int64_t>(row.upper.has_value())};
    key.insert(key.end(), row.coefficients.begin(), row.coefficients.end());
    if (seen.insert(std::move(key)).second) sys.rows.push_back(std::move(row));
  };

  for (const Character* psi : lp.characters(n, brauer_primes)) {
    const long degree = table.degree(*psi);
    for (long t = 0; t < n; ++t) {
      ConstraintRow row;
      row.kind = RowKind::multiplicity;
      row.character = psi->name;
      row.residue = t;
      row.degree = degree;
      row.modulus = n;
      row.lower = 0;
      row.upper = n * degree;
      row.constant = lp.scaled_a(*psi, base, t);
      for (std::size_t x : sys.variables) row.coefficients.push_back(lp.scaled_b(*psi, x, n, t));
      push_unique(std::move(row));
    }
  }
  ConstraintRow aug;
  aug.kind = RowKind::augmentation;
  aug.coefficients.assign(sys.variables.size(), 1);
  aug.constant = -1;
  aug.lower = 0;
  aug.upper = 0;
  push_unique(std::move(aug));
  for (auto& row : congruence_rows(table, n, sys.variables)) push_unique(std::move(row));
  return sys;
}

ConstraintSystem build_system(const CharacterTable& table, const Tower& base, const std::set<long>& brauer_primes) {
  LutharPassi lp(table);
  return build_system(lp, base, brauer_primes);
}

std::vector<Tower> tower_bases(const CharacterTable& /*table*/, long n, const TowerCache& cache) {
  const auto primes = prime_factors(n);
  if (primes.size() == 1 && primes[0] == n) return {Tower{n, {}}};
  std::vector<const std::vector<Tower>*> lower;
  for (long r : primes) {
    auto it = cache.find(n / r);
    if (it == cache.end()) throw std::logic_error("tower cache lacks order " + std::to_string(n / r));
    if (it->second.empty()) return {};
    lower.push_back(&it->second);
  }
  std::vector<Tower> out;
  Tower partial{n, {}};
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == lower.size()) {
      out.push_back(partial);
      return;
    }
    for (const Tower& sub : *lower[i]) {
      std::vector<long> added;
      bool ok = true;
      for (const auto& [m, tuple] : sub.tuples) {
        auto it = partial.tuples.find(m);
        if (it == partial.tuples.end()) {
          partial.tuples.emplace(m, tuple);
          added.push_back(m);
        } else if (it->second != tuple) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
      for (long m : added) partial.tuples.erase(m);
    }
  };
  extend(extend, 0);
  return out;
}

std::vector<Tower> enumerate_admissible(LutharPassi& lp, long n, const TowerCache& cache, const EngineOptions& options) {
  const auto& table = lp.table();
  const auto primes = usable_brauer_primes(table, n, options.use_brauer);
  std::vector<Tower> out;
  for (const Tower& base : tower_bases(table, n, cache)) {
    const ConstraintSystem sys = build_system(lp, base, primes);
    const VariableBox box = variable_bounds(table, n, sys.variables);
    for (const auto& point : solve(sys, box)) {
      PartialAugmentationTuple tuple{n, std::vector<std::int64_t>(table.class_count(), 0)};
      for (std::size_t j = 0; j < point.size(); ++j) tuple.entries[sys.variables[j]] = point[j];
      bool central_ok = true;
      for (std::size_t j = 0; j < point.size(); ++j)
        if (point[j] != 0 && table.is_central(sys.variables[j]) && tuple.basis_index() < 0) central_ok = false;
      if (!central_ok) continue;
      Tower tower = base;
      tower.tuples[n] = std::move(tuple);
      out.push_back(std::move(tower));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Tower> admissible_towers(const CharacterTable& table, long n, const EngineOptions& options) {
  if (n < 2) throw std::invalid_argument("unit order must be at least 2");
  LutharPassi lp(table);
  TowerCache cache;
  for (long m : divisors(n))
    if (m > 1) cache[m] = enumerate_admissible(lp, m, cache, options);
  return cache[n];
}

std::string to_string(OrderStatus status) {
  switch (status) {
    case OrderStatus::infeasible: return "infeasible";
    case OrderStatus::trivial_only: return "trivial_only";
    case OrderStatus::undecided: return "undecided";
  }
  return "?";
}

OrderStatus order_status_from_string(const std::string& s) {
  if (s == "infeasible") return OrderStatus::infeasible;
  if (s == "trivial_only") return OrderStatus::trivial_only;
  if (s == "undecided") return OrderStatus::undecided;
  throw std::invalid_argument("unknown order status '" + s + "'");
}

Report verify_group(const CharacterTable& table, const EngineOptions& options) {
  std::set<long> reported;
  std::set<long> needed;
  const auto all = divisors(table.exponent);
  if (options.orders) {
    for (long n : *options.orders) {
      if (n < 2 || table.exponent % n != 0)
        throw std::invalid_argument("order " + std::to_string(n) + " is not a divisor > 1 of the exponent " +
                                    std::to_string(table.exponent));
      reported.insert(n);
      for (long m : divisors(n))
        if (m > 1) needed.insert(m);
    }
  } else {
    for (long n : all)
      if (n > 1) reported.insert(n), needed.insert(n);
  }

  LutharPassi lp(table);
  TowerCache cache;
  for (long n : needed) cache[n] = enumerate_admissible(lp, n, cache, options);

  Report report;
  report.group = table.name;
  bool undecided = false;
  for (long n : reported) {
    OrderResult r;
    r.n = n;
    r.towers = cache[n];
    r.trivial_count = static_cast<std::size_t>(std::count_if(r.towers.begin(), r.towers.end(), [](const Tower& t) { return t.is_trivial(); }));
    if (r.towers.empty())
      r.status = OrderStatus::infeasible;
    else if (r.trivial_count == r.towers.size())
      r.status = OrderStatus::trivial_only;
    else
      r.status = OrderStatus::undecided, undecided = true;
    report.orders.push_back(std::move(r));
  }
  const bool realized = unrealized_classes(table, report).empty();
  if (undecided)
    report.verdict = kVerdictUndecided;
  else if (!realized)
    report.verdict = kVerdictInconsistent;
  else
    report.verdict = options.orders ? kVerdictSelected : kVerdictVerified;
  return report;
}

std::vector<std::string> unrealized_classes(const CharacterTable& table, const Report& report) {
  std::vector<std::string> out;
  for (std::size_t g = 0; g < table.class_count(); ++g) {
    const long ord = table.classes[g].element_order;
    if (ord == 1) continue;
    auto it = std::find_if(report.orders.begin(), report.orders.end(), [&](const OrderResult& r) { return r.n == ord; });
    if (it == report.orders.end()) continue;
    if (!std::binary_search(it->towers.begin(), it->towers.end(), element_tower(table, g))) out.push_back(table.classes[g].id);
  }
  return out;
}

ordered_json tower_to_json(const CharacterTable& table, const Tower& tower) {
  ordered_json tuples = ordered_json::object();
  for (const auto& [m, tuple] : tower.tuples) {
    ordered_json entries = ordered_json::object();
    for (std::size_t x = 0; x < tuple.entries.size(); ++x)
      if (tuple.entries[x] != 0) entries[table.classes[x].id] = tuple.entries[x];
    tuples[std::to_string(m)] = std::move(entries);
  }
  ordered_json out;
  out["trivial"] = tower.is_trivial();
  out["tuples"] = std::move(tuples);
  return out;
}

Tower tower_from_json(const CharacterTable& table, long order, const json& j) {
  Tower tower;
  tower.order = order;
  for (const auto& [key, entries] : j.at("tuples").items()) {
    const long m = std::stol(key);
    PartialAugmentationTuple tuple{m, std::vector<std::int64_t>(table.class_count(), 0)};
    for (const auto& [id, v] : entries.items()) tuple.entries[table.class_index(id)] = v.get<std::int64_t>();
    tower.tuples[m] = std::move(tuple);
  }
  return tower;
}

ordered_json report_to_json(const CharacterTable& table, const Report& report) {
  ordered_json orders = ordered_json::array();
  for (const auto& r : report.orders) {
    ordered_json towers = ordered_json::array();
    for (const auto& t : r.towers) towers.push_back(tower_to_json(table, t));
    ordered_json o;
    o["n"] = r.n;
    o["status"] = to_string(r.status);
    o["towers"] = std::move(towers);
    o["trivial_count"] = r.trivial_count;
    orders.push_back(std::move(o));
  }
  ordered_json out;
  out["group"] = report.group;
  out["orders"] = std::move(orders);
  out["verdict"] = report.verdict;
  return out;
}

Report report_from_json(const CharacterTable& table, const json& j) {
  Report report;
  report.group = j.at("group").get<std::string>();
  report.verdict = j.at("verdict").get<std::string>();
  for (const auto& o : j.at("orders")) {
    OrderResult r;
    r.n = o.at("n").get<long>();
    r.status = order_status_from_string(o.at("status").get<std::string>());
    r.trivial_count = o.at("trivial_count").get<std::size_t>();
    for (const auto& t : o.at("towers")) r.towers.push_back(tower_from_json(table, r.n, t));
    report.orders.push_back(std::move(r));
  }
  return report;
}

BovdiReport check_bovdi(const std::vector<Tower>& towers, const CharacterTable& table) {
  BovdiReport report;
  for (std::size_t i = 0; i < towers.size(); ++i) {
    for (const auto& [m, tuple] : towers[i].tuples) {
      long r = 0;
      int k = 0;
      if (!is_prime_power(m, &r, &k)) continue;
      ++report.checked;
      long level = 1;
      for (int j = 0; j < k; ++j, level *= r) {
        std::int64_t sum = 0;
        for (std::size_t x = 0; x < table.class_count(); ++x)
          if (table.classes[x].element_order == level) sum += tuple.entries[x];
        if (sum != 0) report.violations.push_back({i, m, level, sum});
      }
    }
  }
  return report;
}

}  // namespace help
