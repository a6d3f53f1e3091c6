#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "help/chartab.hpp"
#include "help/constraints.hpp"
#include "help/solver.hpp"

namespace help {

/// Partial augmentations of every power of a candidate unit u of order n: tuples[m] is the
/// tuple of u^(n/m), of order m, for each divisor m > 1 of n. A tower is "complete" when the
/// top entry tuples[n] is present; bases handed to build_system carry only proper divisors.
struct Tower {
  long order = 1;
  std::map<long, PartialAugmentationTuple> tuples;

  bool has(long m) const { return tuples.contains(m); }
  const PartialAugmentationTuple& at(long m) const;
  const PartialAugmentationTuple& top() const { return at(order); }
  /// Every tuple is a basis vector.
  bool is_trivial() const;

  auto operator<=>(const Tower&) const = default;
};

/// The tower of a group element: tuples[m] is the basis vector at the class of g^(n/m).
Tower element_tower(const CharacterTable& table, std::size_t g);

/// Classes that may carry a nonzero partial augmentation for a unit of order n: element order
/// divides n, and central classes only when their element order is n itself.
std::vector<std::size_t> allowed_classes(const CharacterTable& table, long n);

/// Evaluates the Fourier-inversion pieces for one table and memoises the twisted traces
/// Tr_{Q(zeta_m)/Q}(psi(x) zeta_m^-t). Not safe for concurrent use.
class LutharPassi {
 public:
  explicit LutharPassi(const CharacterTable& table);

  const CharacterTable& table() const { return table_; }

  /// n * b(zeta_n^t, x, psi), an integer.
  std::int64_t scaled_b(const Character& psi, std::size_t x, long n, long t);
  /// n * a(zeta_n^t, u, psi) for the unit described by tower (all proper divisors present).
  std::int64_t scaled_a(const Character& psi, const Tower& tower, long t);
  /// n * mu(zeta_n^t, u, psi) for a complete tower.
  std::int64_t scaled_mu(const Character& psi, const Tower& tower, long t);

  /// Characters used for units of order n: all ordinary ones, then every Brauer character of
  /// each block whose prime is in brauer_primes and does not divide n.
  std::vector<const Character*> characters(long n, const std::set<long>& brauer_primes) const;

 private:
  const std::vector<std::int64_t>& traces(const Character& psi, long m);

  const CharacterTable& table_;
  std::map<std::pair<const Character*, long>, std::vector<std::int64_t>> cache_;
};

Rational coeff_b(const CharacterTable& table, const Character& psi, std::size_t x, long n, long t);
Rational coeff_a(const CharacterTable& table, const Character& psi, const Tower& tower, long t);
Rational multiplicity(const CharacterTable& table, const Character& psi, const Tower& tower, long t);

/// Congruences on sums of partial augmentations over the given variables: for n = r^k, the sum
/// over classes of order r^m vanishes mod r for 1 <= m < k; otherwise, for every prime r | n,
/// the sum over classes of order r vanishes mod r.
std::vector<ConstraintRow> congruence_rows(const CharacterTable& table, long n,
                                           const std::vector<std::size_t>& variables);

/// Primes of the blocks usable for order n.
std::set<long> usable_brauer_primes(const CharacterTable& table, long n, bool use_brauer);

/// Multiplicity rows for every (psi, t), the augmentation row and the congruence rows, with
/// exact duplicates removed. base must hold tuples for every proper divisor m > 1 of n.
ConstraintSystem build_system(LutharPassi& lp, const Tower& base, const std::set<long>& brauer_primes);
ConstraintSystem build_system(const CharacterTable& table, const Tower& base, const std::set<long>& brauer_primes);

struct EngineOptions {
  bool use_brauer = true;
  /// Restricts the orders reported by verify_group; lower orders are still computed.
  std::optional<std::set<long>> orders;
};

using TowerCache = std::map<long, std::vector<Tower>>;

/// Consistent combinations of cached towers of the maximal proper divisors of n.
std::vector<Tower> tower_bases(const CharacterTable& table, long n, const TowerCache& cache);

/// All admissible towers of order n, in increasing order. cache must hold the admissible
/// towers of every proper divisor of n greater than 1.
std::vector<Tower> enumerate_admissible(LutharPassi& lp, long n, const TowerCache& cache, const EngineOptions& options);

/// Admissible towers of a single order n > 1, computing every divisor of n on the way. n need
/// not divide the exponent.
std::vector<Tower> admissible_towers(const CharacterTable& table, long n, const EngineOptions& options = {});

enum class OrderStatus { infeasible, trivial_only, undecided };
std::string to_string(OrderStatus status);
OrderStatus order_status_from_string(const std::string& s);

struct OrderResult {
  long n = 0;
  OrderStatus status = OrderStatus::infeasible;
  std::vector<Tower> towers;
  std::size_t trivial_count = 0;

  bool operator==(const OrderResult&) const = default;
};

inline constexpr const char* kVerdictVerified = "ZC verified";
inline constexpr const char* kVerdictSelected = "verified for selected orders";
inline constexpr const char* kVerdictUndecided = "undecided";
inline constexpr const char* kVerdictInconsistent = "inconsistent";

struct Report {
  std::string group;
  std::vector<OrderResult> orders;
  std::string verdict;

  bool verified() const { return verdict == kVerdictVerified || verdict == kVerdictSelected; }
  bool operator==(const Report&) const = default;
};

/// Scans every divisor n > 1 of the exponent in increasing order.
Report verify_group(const CharacterTable& table, const EngineOptions& options = {});

/// Non-identity classes of a reported order whose element tower is missing from the report's
/// admissible towers. Nonempty only for a bad table.
std::vector<std::string> unrealized_classes(const CharacterTable& table, const Report& report);

nlohmann::ordered_json tower_to_json(const CharacterTable& table, const Tower& tower);
Tower tower_from_json(const CharacterTable& table, long order, const nlohmann::json& j);
nlohmann::ordered_json report_to_json(const CharacterTable& table, const Report& report);
Report report_from_json(const CharacterTable& table, const nlohmann::json& j);

struct BovdiViolation {
  std::size_t tower = 0;
  long tuple_order = 0;
  long level_order = 0;
  std::int64_t sum = 0;
};

struct BovdiReport {
  std::size_t checked = 0;
  std::vector<BovdiViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For each tuple of prime-power order r^k in the towers, the sum over classes of order r^m
/// must be exactly zero for 0 <= m < k.
BovdiReport check_bovdi(const std::vector<Tower>& towers, const CharacterTable& table);

}  // namespace help
