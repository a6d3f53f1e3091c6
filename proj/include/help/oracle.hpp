#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "help/chartab.hpp"
#include "help/constraints.hpp"
#include "help/cyclo.hpp"
#include "help/solver.hpp"

// Slow reference implementations. They share no arithmetic with the fast paths beyond the
// stored coefficients of a CyclotomicNumber.
namespace help::oracle {

/// Tr_{Q(zeta_n)/Q}(a) as the sum of all Galois conjugates, n the conductor of a.
Rational trace_bruteforce(const CyclotomicNumber& a);

/// Tr_{Q(zeta_m)/Q}(a * zeta_m^-t); the conductor of a must divide m.
Rational twisted_trace_bruteforce(const CyclotomicNumber& a, long m, long t);

struct AuditViolation {
  std::string class_id;
  std::string character;
  long residue = 0;
  Rational mu;
  std::string message;
};

struct AuditReport {
  std::size_t checked = 0;
  std::vector<AuditViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// For every class g of order n, every ordinary character and every Brauer character at which
/// g is regular, and every t: mu(zeta_n^t, g, psi) = (1/n) sum_{d | n} Tr(psi(g^d) zeta_n^-td)
/// must be a nonnegative integer, and the mu over t must sum to psi(1). g^d comes from the
/// power maps, so a corrupted map shows up here.
AuditReport mu_group_element_audit(const CharacterTable& table);

inline constexpr double kDefaultScanCap = 5e7;

/// Every point of the box, tested row by row. Throws std::length_error above cap points.
std::vector<IntegerPoint> box_scan(const ConstraintSystem& system, const VariableBox& box,
                                   double cap = kDefaultScanCap);

/// Re-evaluates every row with big integers. Returns the index of the first violated row, or -1.
long first_violated_row(const ConstraintSystem& system, std::span<const std::int64_t> point);

}  // namespace help::oracle
