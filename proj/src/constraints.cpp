#include "help/constraints.hpp"

#include <stdexcept>

namespace help {

std::int64_t ConstraintRow::value(std::span<const std::int64_t> point) const {
  if (point.size() != coefficients.size()) throw std::invalid_argument("point dimension differs from row");
  __int128 v = constant;
  for (std::size_t i = 0; i < point.size(); ++i) v += static_cast<__int128>(coefficients[i]) * point[i];
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("row value overflows 64 bits");
  return static_cast<std::int64_t>(v);
}

bool ConstraintRow::satisfied_by(std::span<const std::int64_t> point) const {
  const std::int64_t v = value(point);
  if (lower && v < *lower) return false;
  if (upper && v > *upper) return false;
  return modulus <= 1 || v % modulus == 0;
}

bool ConstraintRow::same_constraint(const ConstraintRow& other) const {
  return constant == other.constant && modulus == other.modulus && lower == other.lower && upper == other.upper &&
         coefficients == other.coefficients;
}

bool ConstraintSystem::satisfied_by(std::span<const std::int64_t> point) const {
  for (const auto& row : rows)
    if (!row.satisfied_by(point)) return false;
  return true;
}

}  // namespace help
