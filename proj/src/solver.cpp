#include "help/solver.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "help/numtheory.hpp"

namespace help {

namespace {

using Wide = __int128;

constexpr int kMaxPasses = 64;

Wide floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Wide ceil_div(Wide a, Wide b) { return -floor_div(-a, b); }

Wide wide_mod(Wide a, Wide m) {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max()) return std::numeric_limits<std::int64_t>::max();
  if (v < std::numeric_limits<std::int64_t>::min()) return std::numeric_limits<std::int64_t>::min();
  return static_cast<std::int64_t>(v);
}

// One pass over one row; returns false on infeasibility, sets changed when a bound moved.
bool tighten_row(const ConstraintRow& row, VariableBox& box, bool& changed) {
  const auto& c = row.coefficients;
  Wide lo_sum = row.constant, hi_sum = row.constant, fixed = row.constant;
  std::size_t unfixed = 0, last = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const Wide a = static_cast<Wide>(c[j]) * box.lower[j];
    const Wide b = static_cast<Wide>(c[j]) * box.upper[j];
    lo_sum += std::min(a, b);
    hi_sum += std::max(a, b);
    if (box.lower[j] == box.upper[j]) {
      fixed += a;
    } else {
      ++unfixed;
      last = j;
    }
  }
  if (row.lower && hi_sum < *row.lower) return false;
  if (row.upper && lo_sum > *row.upper) return false;
  if (unfixed == 0) return row.modulus <= 1 || wide_mod(fixed, row.modulus) == 0;

  if (row.lower || row.upper) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] == 0 || box.lower[j] == box.upper[j]) continue;
      const Wide a = static_cast<Wide>(c[j]) * box.lower[j];
      const Wide b = static_cast<Wide>(c[j]) * box.upper[j];
      const Wide rest_lo = lo_sum - std::min(a, b);
      const Wide rest_hi = hi_sum - std::max(a, b);
      Wide new_lo = box.lower[j], new_hi = box.upper[j];
      // c_j * x_j lies in [lower - rest_hi, upper - rest_lo].
      if (row.lower) {
        const Wide bound = *row.lower - rest_hi;
        if (c[j] > 0)
          new_lo = std::max(new_lo, ceil_div(bound, c[j]));
        else
          new_hi = std::min(new_hi, floor_div(bound, c[j]));
      }
      if (row.upper) {
        const Wide bound = *row.upper - rest_lo;
        if (c[j] > 0)
          new_hi = std::min(new_hi, floor_div(bound, c[j]));
        else
          new_lo = std::max(new_lo, ceil_div(bound, c[j]));
      }
      if (new_lo > new_hi) return false;
      if (new_lo != box.lower[j] || new_hi != box.upper[j]) {
        box.lower[j] = narrow(new_lo);
        box.upper[j] = narrow(new_hi);
        changed = true;
      }
    }
  }

  if (row.modulus > 1 && unfixed == 1 && box.lower[last] != box.upper[last]) {
    // c * x = -fixed (mod M)
    const Wide m = row.modulus;
    const Wide cj = c[last];
    const Wide rhs = wide_mod(-fixed, m);
    const Wide g = gcd(static_cast<long>(wide_mod(cj, m)), static_cast<long>(row.modulus));
    if (rhs % g != 0) return false;
    const Wide reduced = m / g;
    Wide x0 = 0;
    if (reduced > 1) {
      const long inv = inverse_mod(static_cast<long>(wide_mod(cj / g, reduced)), static_cast<long>(reduced));
      x0 = wide_mod((rhs / g) * inv, reduced);
    }
    const Wide lo = box.lower[last], hi = box.upper[last];
    const Wide new_lo = lo + wide_mod(x0 - lo, reduced);
    const Wide new_hi = hi - wide_mod(hi - x0, reduced);
    if (new_lo > new_hi) return false;
    if (new_lo != lo || new_hi != hi) {
      box.lower[last] = narrow(new_lo);
      box.upper[last] = narrow(new_hi);
      changed = true;
    }
  }
  return true;
}

struct Search {
  const ConstraintSystem& system;
  std::vector<IntegerPoint> found;

  bool tie_before(std::size_t a, std::size_t b) const {
    const auto& ids = system.variable_ids;
    if (ids.size() > std::max(a, b)) return ids[a] < ids[b];
    return a < b;
  }

  std::size_t pick(const VariableBox& box) const {
    std::size_t best = box.size();
    for (std::size_t j = 0; j < box.size(); ++j) {
      if (box.lower[j] == box.upper[j]) continue;
      if (best == box.size()) {
        best = j;
        continue;
      }
      const Wide wj = static_cast<Wide>(box.upper[j]) - box.lower[j];
      const Wide wb = static_cast<Wide>(box.upper[best]) - box.lower[best];
      if (wj < wb || (wj == wb && tie_before(j, best))) best = j;
    }
    return best;
  }

  void run(VariableBox box) {
    auto tightened = propagate(system, std::move(box));
    if (!tightened) return;
    const std::size_t j = pick(*tightened);
    if (j == tightened->size()) {
      if (system.satisfied_by(tightened->lower)) found.push_back(tightened->lower);
      return;
    }
    for (std::int64_t v = tightened->lower[j];; ++v) {
      VariableBox child = *tightened;
      child.lower[j] = child.upper[j] = v;
      run(std::move(child));
      if (v == tightened->upper[j]) break;
    }
  }
};

}  // namespace

bool VariableBox::contains(std::span<const std::int64_t> point) const {
  if (point.size() != size()) return false;
  for (std::size_t i = 0; i < point.size(); ++i)
    if (point[i] < lower[i] || point[i] > upper[i]) return false;
  return true;
}

double VariableBox::volume() const {
  double v = 1;
  for (std::size_t i = 0; i < size(); ++i) {
    if (upper[i] < lower[i]) return 0;
    v *= static_cast<double>(upper[i] - lower[i]) + 1;
  }
  return v;
}

VariableBox variable_bounds(const CharacterTable& table, long /*n*/, std::span<const std::size_t> classes) {
  VariableBox box;
  for (std::size_t x : classes) {
    const long size = table.class_size(x);
    box.lower.push_back(-size);
    box.upper.push_back(size);
  }
  return box;
}

std::optional<VariableBox> propagate(const ConstraintSystem& system, VariableBox box) {
  if (box.size() != system.variables.size()) throw std::invalid_argument("box dimension differs from system");
  for (std::size_t j = 0; j < box.size(); ++j)
    if (box.lower[j] > box.upper[j]) return std::nullopt;
  bool changed = true;
  for (int pass = 0; changed && pass < kMaxPasses; ++pass) {
    changed = false;
    for (const auto& row : system.rows)
      if (!tighten_row(row, box, changed)) return std::nullopt;
  }
  return box;
}

std::vector<IntegerPoint> solve(const ConstraintSystem& system, const VariableBox& box) {
  Search search{system, {}};
  search.run(box);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

}  // namespace help
