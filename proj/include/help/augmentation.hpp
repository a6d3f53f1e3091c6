#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace help {

/// Partial augmentations of a torsion unit of a given order, one integer per class of the
/// table the tuple was built for (dense, in table class order).
struct PartialAugmentationTuple {
  long order = 1;
  std::vector<std::int64_t> entries;

  static PartialAugmentationTuple basis(long order, std::size_t class_count, std::size_t at) {
    PartialAugmentationTuple t{order, std::vector<std::int64_t>(class_count, 0)};
    t.entries[at] = 1;
    return t;
  }

  std::int64_t augmentation() const {
    std::int64_t s = 0;
    for (auto e : entries) s += e;
    return s;
  }

  /// Index of the single nonzero entry when the tuple is a basis vector, otherwise -1.
  std::ptrdiff_t basis_index() const {
    std::ptrdiff_t at = -1;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] == 0) continue;
      if (entries[i] != 1 || at >= 0) return -1;
      at = static_cast<std::ptrdiff_t>(i);
    }
    return at;
  }
  bool is_basis_vector() const { return basis_index() >= 0; }

  auto operator<=>(const PartialAugmentationTuple&) const = default;
};

}  // namespace help
