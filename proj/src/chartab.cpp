#include "help/chartab.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "help/numtheory.hpp"

namespace help {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& message) { throw TableError(message); }

long get_positive(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_number_integer()) fail(where + ": missing integer field '" + key + "'");
  const long v = obj.at(key).get<long>();
  if (v < 1) fail(where + ": field '" + key + "' must be positive");
  return v;
}

std::string get_string(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_string()) fail(where + ": missing string field '" + key + "'");
  return obj.at(key).get<std::string>();
}

std::vector<CyclotomicNumber> parse_values(const CharacterTable& table, const json& values,
                                           const std::vector<std::size_t>& expected_classes,
                                           const std::string& where) {
  if (!values.is_object()) fail(where + ": 'values' must be an object keyed by class id");
  std::vector<CyclotomicNumber> out(table.class_count());
  std::vector<bool> seen(table.class_count(), false);
  for (const auto& [id, v] : values.items()) {
    const auto x = table.find_class(id);
    if (!x) fail(where + ": unknown class '" + id + "'");
    try {
      out[*x] = parse_cyclotomic(v);
    } catch (const std::exception& e) {
      fail(where + " at class " + id + ": " + e.what());
    }
    seen[*x] = true;
  }
  for (std::size_t x : expected_classes)
    if (!seen[x]) fail(where + ": no value for class '" + table.classes[x].id + "'");
  for (std::size_t x = 0; x < seen.size(); ++x)
    if (seen[x] && std::find(expected_classes.begin(), expected_classes.end(), x) == expected_classes.end())
      fail(where + ": value given for class '" + table.classes[x].id + "' outside its domain");
  return out;
}

void check_character(const CharacterTable& table, const Character& chi, const std::vector<std::size_t>& domain) {
  const std::string where = "character " + chi.name;
  if (chi.values.size() != table.class_count()) fail(where + ": wrong number of values");
  const auto& one = chi.values[table.identity_class()];
  if (!one.is_rational() || !is_integer(one.to_rational()) || one.to_rational() <= 0)
    fail(where + ": degree must be a positive integer, got " + one.to_string());
  for (std::size_t x : domain) {
    const auto& v = chi.values[x];
    if (table.exponent % v.conductor() != 0)
      fail(where + " at class " + table.classes[x].id + ": conductor " + std::to_string(v.conductor()) +
           " does not divide the exponent");
    if (!v.is_integral()) fail(where + " at class " + table.classes[x].id + ": value is not an algebraic integer");
  }
}

std::vector<std::size_t> all_classes(const CharacterTable& table) {
  std::vector<std::size_t> v(table.class_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
  return v;
}

}  // namespace

long CharacterTable::degree(const Character& psi) const {
  return to_int64(psi.values[identity_class()].to_rational());
}

std::optional<std::size_t> CharacterTable::find_class(std::string_view id) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].id == id) return i;
  return std::nullopt;
}

std::size_t CharacterTable::class_index(std::string_view id) const {
  auto x = find_class(id);
  if (!x) fail("unknown class '" + std::string(id) + "'");
  return *x;
}

std::size_t CharacterTable::identity_class() const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i].element_order == 1) return i;
  fail("table has no identity class");
}

std::size_t CharacterTable::class_of_power(std::size_t x, long d) const {
  if (d < 1) throw std::invalid_argument("class_of_power: exponent must be positive");
  for (long p = 2; d > 1; ++p) {
    while (d % p == 0) {
      d /= p;
      auto it = power_maps.find(p);
      if (it != power_maps.end()) {
        x = it->second[x];
        continue;
      }
      if (exponent % p == 0) fail("no power map for prime " + std::to_string(p));
      x = galois_image(x, p);
    }
  }
  return x;
}

// For p prime to the group order exponent, x^p is the class on which every ordinary character
// takes the Galois image of its value at x.
std::size_t CharacterTable::galois_image(std::size_t x, long p) const {
  for (std::size_t y = 0; y < classes.size(); ++y) {
    if (classes[y].element_order != classes[x].element_order) continue;
    bool match = true;
    for (const auto& chi : ordinary) {
      const auto& v = chi.values[x];
      if (chi.values[y] != v.galois(mod(p, v.conductor()))) {
        match = false;
        break;
      }
    }
    if (match) return y;
  }
  fail("no class matches the Galois image of " + classes[x].id + " under " + std::to_string(p));
}

const BrauerBlock* CharacterTable::block(long prime) const {
  for (const auto& b : brauer)
    if (b.prime == prime) return &b;
  return nullptr;
}

void CharacterTable::validate() const {
  if (classes.empty()) fail("table has no classes");
  if (order < 1 || exponent < 1) fail("group order and exponent must be positive");
  std::set<std::string> ids;
  long order_lcm = 1;
  int identities = 0;
  for (const auto& c : classes) {
    const std::string where = "class " + c.id;
    if (c.id.empty()) fail("empty class id");
    if (!ids.insert(c.id).second) fail("duplicate class id '" + c.id + "'");
    if (c.element_order < 1 || c.centralizer_order < 1) fail(where + ": orders must be positive");
    if (order % c.centralizer_order != 0) fail(where + ": centralizer order does not divide the group order");
    if (c.centralizer_order % c.element_order != 0) fail(where + ": element order does not divide centralizer order");
    if (c.element_order == 1) {
      ++identities;
      if (c.centralizer_order != order) fail(where + ": identity class must have size 1");
    }
    order_lcm = lcm(order_lcm, c.element_order);
  }
  if (identities != 1) fail("table must have exactly one class of element order 1");
  if (order_lcm != exponent)
    fail("exponent " + std::to_string(exponent) + " differs from lcm of element orders " + std::to_string(order_lcm));
  long total = 0;
  for (std::size_t x = 0; x < classes.size(); ++x) total += class_size(x);
  if (total != order) fail("class sizes sum to " + std::to_string(total) + ", not the group order");

  for (long p : prime_factors(exponent))
    if (!power_maps.contains(p)) fail("missing power map for prime " + std::to_string(p));
  for (const auto& [p, map] : power_maps) {
    if (!is_prime(p)) fail("power map key " + std::to_string(p) + " is not prime");
    if (map.size() != classes.size()) fail("power map " + std::to_string(p) + " does not cover every class");
    for (std::size_t x = 0; x < classes.size(); ++x) {
      if (map[x] >= classes.size()) fail("power map " + std::to_string(p) + " has an out-of-range image");
      const long ord = classes[x].element_order;
      if (classes[map[x]].element_order != ord / gcd(ord, p))
        fail("power map " + std::to_string(p) + " is inconsistent at class " + classes[x].id + " (image " +
             classes[map[x]].id + ")");
    }
  }

  if (ordinary.size() != classes.size())
    fail("table has " + std::to_string(ordinary.size()) + " ordinary characters but " +
         std::to_string(classes.size()) + " classes");
  const auto every = all_classes(*this);
  for (const auto& chi : ordinary) {
    if (chi.kind != CharacterKind::ordinary) fail("character " + chi.name + " is listed as ordinary but tagged Brauer");
    check_character(*this, chi, every);
  }

  // Row orthogonality: sum_x chi(x) conj(chi'(x)) / |C(x)| = delta.
  std::vector<std::vector<CyclotomicNumber>> conjugates(ordinary.size());
  for (std::size_t i = 0; i < ordinary.size(); ++i)
    for (const auto& v : ordinary[i].values) conjugates[i].push_back(v.conj());
  for (std::size_t i = 0; i < ordinary.size(); ++i) {
    for (std::size_t j = i; j < ordinary.size(); ++j) {
      CyclotomicSum sum;
      for (std::size_t x = 0; x < classes.size(); ++x)
        sum.add(ordinary[i].values[x] * conjugates[j][x], make_rational(1, classes[x].centralizer_order));
      const auto v = sum.value();
      if (!(v == CyclotomicNumber(i == j ? 1 : 0)))
        fail("row orthogonality fails for characters " + ordinary[i].name + ", " + ordinary[j].name +
             ": inner product " + v.to_string());
    }
  }
  // Column orthogonality: sum_chi chi(x) conj(chi(y)) = delta_xy |C(x)|.
  for (std::size_t x = 0; x < classes.size(); ++x) {
    for (std::size_t y = x; y < classes.size(); ++y) {
      CyclotomicSum sum;
      for (std::size_t i = 0; i < ordinary.size(); ++i) sum.add(ordinary[i].values[x] * conjugates[i][y]);
      const auto v = sum.value();
      if (!(v == CyclotomicNumber(x == y ? classes[x].centralizer_order : 0)))
        fail("column orthogonality fails for classes " + classes[x].id + ", " + classes[y].id + ": sum " +
             v.to_string());
    }
  }

  std::set<long> primes;
  for (const auto& b : brauer) {
    const std::string where = "Brauer block mod " + std::to_string(b.prime);
    if (!is_prime(b.prime) || order % b.prime != 0) fail(where + ": prime must divide the group order");
    if (!primes.insert(b.prime).second) fail(where + ": duplicate block");
    std::vector<std::size_t> regular;
    for (std::size_t x = 0; x < classes.size(); ++x)
      if (gcd(classes[x].element_order, b.prime) == 1) regular.push_back(x);
    auto listed = b.regular_classes;
    std::sort(listed.begin(), listed.end());
    if (listed != regular) fail(where + ": regular classes must be exactly the classes of order prime to p");
    if (b.characters.empty()) fail(where + ": no characters");
    for (const auto& phi : b.characters) {
      if (phi.kind != CharacterKind::brauer || phi.prime != b.prime) fail(where + ": character " + phi.name + " mis-tagged");
      check_character(*this, phi, regular);
      for (std::size_t x = 0; x < classes.size(); ++x)
        if (gcd(classes[x].element_order, b.prime) != 1 && !phi.values[x].is_zero())
          fail(where + ": character " + phi.name + " has a value on p-singular class " + classes[x].id);
    }
    if (b.decomposition) {
      const auto& d = *b.decomposition;
      if (d.size() != ordinary.size()) fail(where + ": decomposition matrix needs one row per ordinary character");
      for (const auto& row : d)
        if (row.size() != b.characters.size()) fail(where + ": decomposition matrix needs one column per Brauer character");
    }
  }
}

CyclotomicNumber parse_cyclotomic(const json& j) {
  if (j.is_number_integer()) return CyclotomicNumber(j.get<long>());
  if (!j.is_object() || !j.contains("conductor") || !j.contains("terms"))
    throw std::invalid_argument("expected an integer or {\"conductor\", \"terms\"}");
  const auto& cond = j.at("conductor");
  if (!cond.is_number_integer() || cond.get<long>() < 1) throw std::invalid_argument("conductor must be a positive integer");
  std::vector<std::pair<Rational, long>> terms;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer() ||
        !t[2].is_number_integer())
      throw std::invalid_argument("each term must be [num, den, exp] integers");
    if (t[1].get<long>() == 0) throw std::invalid_argument("zero denominator");
    terms.emplace_back(make_rational(t[0].get<long>(), t[1].get<long>()), t[2].get<long>());
  }
  return CyclotomicNumber::from_terms(cond.get<long>(), terms);
}

ordered_json serialize_cyclotomic(const CyclotomicNumber& a) {
  if (a.is_rational() && is_integer(a.to_rational())) return to_int64(a.to_rational());
  ordered_json terms = ordered_json::array();
  for (const auto& [c, e] : a.terms())
    terms.push_back(ordered_json::array({to_int64(Integer(c.get_num())), to_int64(Integer(c.get_den())), e}));
  ordered_json out;
  out["conductor"] = a.conductor();
  out["terms"] = std::move(terms);
  return out;
}

CharacterTable parse_table(const json& doc) {
  if (!doc.is_object()) fail("table document must be a JSON object");
  CharacterTable t;
  t.name = get_string(doc, "name", "table");
  t.order = get_positive(doc, "order", "table");
  t.exponent = get_positive(doc, "exponent", "table");
  if (!doc.contains("classes") || !doc.at("classes").is_array()) fail("table: 'classes' must be an array");
  for (const auto& c : doc.at("classes")) {
    ConjugacyClass cls;
    cls.id = get_string(c, "id", "class");
    cls.element_order = get_positive(c, "element_order", "class " + cls.id);
    cls.centralizer_order = get_positive(c, "centralizer_order", "class " + cls.id);
    if (t.find_class(cls.id)) fail("duplicate class id '" + cls.id + "'");
    t.classes.push_back(std::move(cls));
  }
  if (doc.contains("power_maps")) {
    const auto& maps = doc.at("power_maps");
    if (!maps.is_object()) fail("table: 'power_maps' must be an object");
    for (const auto& [key, m] : maps.items()) {
      long p = 0;
      try {
        std::size_t used = 0;
        p = std::stol(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail("power map key '" + key + "' is not an integer");
      }
      if (!m.is_object()) fail("power map " + key + " must be an object");
      std::vector<std::size_t> image(t.class_count(), t.class_count());
      for (const auto& [from, to] : m.items()) {
        if (!to.is_string()) fail("power map " + key + ": image of " + from + " must be a class id");
        image[t.class_index(from)] = t.class_index(to.get<std::string>());
      }
      for (std::size_t x = 0; x < image.size(); ++x)
        if (image[x] == t.class_count()) fail("power map " + key + " has no image for class " + t.classes[x].id);
      t.power_maps[p] = std::move(image);
    }
  }
  const auto every = all_classes(t);
  if (!doc.contains("ordinary") || !doc.at("ordinary").is_array()) fail("table: 'ordinary' must be an array");
  for (const auto& c : doc.at("ordinary")) {
    Character chi;
    chi.name = get_string(c, "name", "ordinary character");
    if (!c.contains("values")) fail("character " + chi.name + ": missing 'values'");
    chi.values = parse_values(t, c.at("values"), every, "character " + chi.name);
    t.ordinary.push_back(std::move(chi));
  }
  if (doc.contains("brauer")) {
    if (!doc.at("brauer").is_array()) fail("table: 'brauer' must be an array");
    for (const auto& b : doc.at("brauer")) {
      BrauerBlock block;
      block.prime = get_positive(b, "prime", "Brauer block");
      const std::string where = "Brauer block mod " + std::to_string(block.prime);
      if (!b.contains("regular_classes") || !b.at("regular_classes").is_array()) fail(where + ": missing 'regular_classes'");
      for (const auto& id : b.at("regular_classes")) {
        if (!id.is_string()) fail(where + ": regular class ids must be strings");
        block.regular_classes.push_back(t.class_index(id.get<std::string>()));
      }
      if (!b.contains("characters") || !b.at("characters").is_array()) fail(where + ": missing 'characters'");
      for (const auto& c : b.at("characters")) {
        Character phi;
        phi.name = get_string(c, "name", where + " character");
        phi.kind = CharacterKind::brauer;
        phi.prime = block.prime;
        if (!c.contains("values")) fail(where + ": character " + phi.name + " missing 'values'");
        phi.values = parse_values(t, c.at("values"), block.regular_classes, where + " character " + phi.name);
        block.characters.push_back(std::move(phi));
      }
      if (b.contains("decomposition") && !b.at("decomposition").is_null()) {
        std::vector<std::vector<long>> d;
        for (const auto& row : b.at("decomposition")) {
          if (!row.is_array()) fail(where + ": decomposition rows must be arrays");
          std::vector<long> r;
          for (const auto& v : row) {
            if (!v.is_number_integer()) fail(where + ": decomposition entries must be integers");
            r.push_back(v.get<long>());
          }
          d.push_back(std::move(r));
        }
        block.decomposition = std::move(d);
      }
      t.brauer.push_back(std::move(block));
    }
  }
  t.validate();
  return t;
}

CharacterTable parse_table(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
  return parse_table(doc);
}

CharacterTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_table(std::string_view(buffer.str()));
}

ordered_json serialize_table(const CharacterTable& t) {
  ordered_json doc;
  doc["name"] = t.name;
  doc["order"] = t.order;
  doc["exponent"] = t.exponent;
  ordered_json classes = ordered_json::array();
  for (const auto& c : t.classes)
    classes.push_back({{"id", c.id}, {"element_order", c.element_order}, {"centralizer_order", c.centralizer_order}});
  doc["classes"] = std::move(classes);
  ordered_json maps = ordered_json::object();
  for (const auto& [p, image] : t.power_maps) {
    ordered_json m = ordered_json::object();
    for (std::size_t x = 0; x < image.size(); ++x) m[t.classes[x].id] = t.classes[image[x]].id;
    maps[std::to_string(p)] = std::move(m);
  }
  doc["power_maps"] = std::move(maps);
  auto values_of = [&](const Character& chi, const std::vector<std::size_t>& domain) {
    ordered_json v = ordered_json::object();
    for (std::size_t x : domain) v[t.classes[x].id] = serialize_cyclotomic(chi.values[x]);
    return v;
  };
  const auto every = all_classes(t);
  ordered_json ordinary = ordered_json::array();
  for (const auto& chi : t.ordinary) ordinary.push_back({{"name", chi.name}, {"values", values_of(chi, every)}});
  doc["ordinary"] = std::move(ordinary);
  ordered_json blocks = ordered_json::array();
  for (const auto& b : t.brauer) {
    ordered_json block;
    block["prime"] = b.prime;
    ordered_json regular = ordered_json::array();
    for (std::size_t x : b.regular_classes) regular.push_back(t.classes[x].id);
    block["regular_classes"] = std::move(regular);
    ordered_json chars = ordered_json::array();
    for (const auto& phi : b.characters)
      chars.push_back({{"name", phi.name}, {"values", values_of(phi, b.regular_classes)}});
    block["characters"] = std::move(chars);
    if (b.decomposition) block["decomposition"] = *b.decomposition;
    blocks.push_back(std::move(block));
  }
  doc["brauer"] = std::move(blocks);
  return doc;
}

CyclotomicNumber character_value_of_tuple(const CharacterTable& table, const Character& psi,
                                          const PartialAugmentationTuple& eps) {
  if (eps.entries.size() != table.class_count()) throw std::invalid_argument("tuple does not match the table");
  CyclotomicSum sum;
  for (std::size_t x = 0; x < eps.entries.size(); ++x) {
    if (eps.entries[x] == 0) continue;
    if (psi.kind == CharacterKind::brauer && gcd(table.classes[x].element_order, psi.prime) != 1)
      throw std::invalid_argument("Brauer character " + psi.name + " evaluated on a tuple supported on p-singular class " +
                                  table.classes[x].id);
    sum.add(psi.values[x], static_cast<long>(eps.entries[x]));
  }
  return sum.value();
}

DecompositionReport validate_decomposition(const CharacterTable& table, const BrauerBlock& block) {
  if (!block.decomposition) fail("Brauer block mod " + std::to_string(block.prime) + " has no decomposition matrix");
  const auto& d = *block.decomposition;
  if (d.size() != table.ordinary.size()) fail("decomposition matrix row count differs from the ordinary character count");
  DecompositionReport report;
  report.prime = block.prime;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].size() != block.characters.size())
      fail("decomposition matrix column count differs from the Brauer character count");
    for (std::size_t x : block.regular_classes) {
      CyclotomicSum sum;
      for (std::size_t j = 0; j < d[i].size(); ++j) sum.add(block.characters[j].values[x], d[i][j]);
      const auto actual = sum.value();
      ++report.checked;
      if (!(actual == table.ordinary[i].values[x]))
        report.failures.push_back({table.ordinary[i].name, table.classes[x].id, table.ordinary[i].values[x], actual});
    }
  }
  return report;
}

}  // namespace help
