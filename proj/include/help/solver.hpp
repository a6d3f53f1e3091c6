#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "help/chartab.hpp"
#include "help/constraints.hpp"

namespace help {

/// Inclusive integer bounds per variable.
struct VariableBox {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;

  std::size_t size() const { return lower.size(); }
  bool contains(std::span<const std::int64_t> point) const;
  /// Number of integer points, saturating at a large double.
  double volume() const;
};

using IntegerPoint = std::vector<std::int64_t>;

/// |eps_x| <= |x^G|, from eps_x = sum_chi chi(u) conj(chi(x)) / |C(x)| and |chi(u)| <= chi(1).
VariableBox variable_bounds(const CharacterTable& table, long n, std::span<const std::size_t> classes);

/// Single-row interval propagation and modulus filtering to a fixpoint (or a pass limit).
/// Returns nullopt when some row cannot be satisfied inside the box.
std::optional<VariableBox> propagate(const ConstraintSystem& system, VariableBox box);

/// All integer points of the box satisfying every row, in lexicographic order.
std::vector<IntegerPoint> solve(const ConstraintSystem& system, const VariableBox& box);

}  // namespace help
