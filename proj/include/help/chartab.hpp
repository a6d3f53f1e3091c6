#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "help/augmentation.hpp"
#include "help/cyclo.hpp"

namespace help {

/// Raised for malformed or inconsistent character table input.
class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConjugacyClass {
  std::string id;
  long element_order = 1;
  long centralizer_order = 1;

  bool operator==(const ConjugacyClass&) const = default;
};

enum class CharacterKind { ordinary, brauer };

/// A class function given by its values, in table class order. Brauer characters carry their
/// prime; their values on p-singular classes are undefined and stored as zero.
struct Character {
  std::string name;
  CharacterKind kind = CharacterKind::ordinary;
  long prime = 0;
  std::vector<CyclotomicNumber> values;

  bool operator==(const Character&) const = default;
};

struct BrauerBlock {
  long prime = 0;
  std::vector<std::size_t> regular_classes;
  std::vector<Character> characters;
  /// Rows indexed by ordinary characters, columns by the block's Brauer characters.
  std::optional<std::vector<std::vector<long>>> decomposition;

  bool operator==(const BrauerBlock&) const = default;
};

class CharacterTable {
 public:
  std::string name;
  long order = 1;
  long exponent = 1;
  std::vector<ConjugacyClass> classes;
  /// prime -> image class index for every class.
  std::map<long, std::vector<std::size_t>> power_maps;
  std::vector<Character> ordinary;
  std::vector<BrauerBlock> brauer;

  std::size_t class_count() const { return classes.size(); }
  std::optional<std::size_t> find_class(std::string_view id) const;
  /// Throws TableError for an unknown label.
  std::size_t class_index(std::string_view id) const;
  std::size_t identity_class() const;
  long class_size(std::size_t x) const { return order / classes[x].centralizer_order; }
  bool is_central(std::size_t x) const { return classes[x].centralizer_order == order; }
  long degree(const Character& psi) const;

  /// Class of x^d, composing the stored prime power maps. Primes not dividing the exponent
  /// have no stored map and go through galois_image. Throws TableError for a missing map.
  std::size_t class_of_power(std::size_t x, long d) const;
  /// Class of x^p for a prime p not dividing the exponent, read off the character values.
  std::size_t galois_image(std::size_t x, long p) const;

  const BrauerBlock* block(long prime) const;

  /// Checks every structural invariant, both orthogonality relations and all power maps.
  /// Throws TableError naming the offending class or character.
  void validate() const;

  bool operator==(const CharacterTable&) const = default;
};

CyclotomicNumber parse_cyclotomic(const nlohmann::json& j);
nlohmann::ordered_json serialize_cyclotomic(const CyclotomicNumber& a);

CharacterTable parse_table(const nlohmann::json& document);
CharacterTable parse_table(std::string_view text);
CharacterTable load_table(const std::filesystem::path& path);
nlohmann::ordered_json serialize_table(const CharacterTable& table);

/// Sum over classes of eps_x * psi(x). A Brauer character only accepts tuples that vanish on
/// its p-singular classes.
CyclotomicNumber character_value_of_tuple(const CharacterTable& table, const Character& psi,
                                          const PartialAugmentationTuple& eps);

struct DecompositionFailure {
  std::string ordinary;
  std::string class_id;
  CyclotomicNumber expected;  // chi(x)
  CyclotomicNumber actual;    // sum_j d_ij phi_j(x)
};

struct DecompositionReport {
  long prime = 0;
  std::size_t checked = 0;
  std::vector<DecompositionFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks chi_i(x) = sum_j d_ij phi_j(x) on every p-regular class.
DecompositionReport validate_decomposition(const CharacterTable& table, const BrauerBlock& block);

}  // namespace help
