#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace help {

enum class RowKind { multiplicity, augmentation, congruence };

/// One integer constraint on v = constant + sum_x coefficients[x] * eps_x:
/// lower <= v <= upper (each bound optional) and v = 0 mod modulus when modulus > 1.
///
/// A multiplicity row for (psi, t) is n * mu(zeta_n^t, u, psi) with the denominators cleared,
/// so it carries modulus n and bounds [0, n * psi(1)].
struct ConstraintRow {
  RowKind kind = RowKind::multiplicity;
  std::vector<std::int64_t> coefficients;
  std::int64_t constant = 0;
  std::int64_t modulus = 0;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper;

  // Provenance of multiplicity rows.
  std::string character;
  long residue = 0;
  long degree = 0;

  std::int64_t value(std::span<const std::int64_t> point) const;
  bool satisfied_by(std::span<const std::int64_t> point) const;
  /// Same linear form, bounds and modulus (provenance ignored).
  bool same_constraint(const ConstraintRow& other) const;
};

struct ConstraintSystem {
  long order = 1;
  std::vector<std::size_t> variables;      // table class indices
  std::vector<std::string> variable_ids;   // class labels, same order
  std::vector<ConstraintRow> rows;

  bool satisfied_by(std::span<const std::int64_t> point) const;
};

}  // namespace help
