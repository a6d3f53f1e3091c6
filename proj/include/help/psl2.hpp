#pragma once

#include "help/chartab.hpp"

namespace help {

/// PSL(2,q) for an odd prime power q = p^f >= 5. Classes are labelled "1a", "pc", "pd"
/// (the two unipotent classes), "a<l>" (split torus, a of order (q-1)/2) and "b<m>"
/// (non-split torus, b of order (q+1)/2).
struct Psl2Parameters {
  long p = 0;
  long f = 0;
  long q = 0;
  int epsilon = 0;  // q = epsilon mod 4
  long order_a = 0;
  long order_b = 0;

  long group_order() const { return q * (q * q - 1) / 2; }
  long a_class_count() const { return epsilon == 1 ? (q - 1) / 4 : (q - 3) / 4; }
  long b_class_count() const { return epsilon == 1 ? (q - 1) / 4 : (q + 1) / 4; }
  long chi_count() const { return epsilon == 1 ? (q - 5) / 4 : (q - 3) / 4; }
  long theta_count() const { return epsilon == 1 ? (q - 1) / 4 : (q - 3) / 4; }
};

/// Throws std::invalid_argument unless p is an odd prime, f >= 1 and p^f >= 5.
Psl2Parameters psl2_parameters(long p, long f = 1);

CharacterTable generate_ordinary(const Psl2Parameters& params);

/// All irreducible Brauer characters in the defining characteristic p, from Steinberg's tensor
/// product theorem. For f = 1 they are phi_1, phi_3, ..., phi_p (named by degree); for f >= 2
/// they are named by their digits, e.g. "phi[2,0]". The table must be the one produced by
/// generate_ordinary for the same parameters.
BrauerBlock generate_brauer_defining(const Psl2Parameters& params, const CharacterTable& table);

/// Ordinary table, plus the defining-characteristic block when with_brauer is set.
CharacterTable generate_psl2(long p, long f, bool with_brauer);

}  // namespace help
