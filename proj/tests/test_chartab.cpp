#include <doctest.h>

#include <map>
#include <set>

#include "help/chartab.hpp"
#include "help/fixtures.hpp"
#include "support.hpp"

using namespace help;
using nlohmann::json;

namespace {

json s5_document() { return json::parse(fixture_json("s5")); }

const Character& brauer(const CharacterTable& t, long p, const std::string& name) {
  for (const auto& c : t.block(p)->characters)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

PartialAugmentationTuple tuple(const CharacterTable& t, long order, std::map<std::string, std::int64_t> entries) {
  PartialAugmentationTuple e{order, std::vector<std::int64_t>(t.class_count(), 0)};
  for (const auto& [id, v] : entries) e.entries[t.class_index(id)] = v;
  return e;
}

}  // namespace

TEST_CASE("S5 fixture shape") {
  const auto t = load_fixture("s5");
  CHECK(t.class_count() == 7);
  CHECK(t.ordinary.size() == 7);
  REQUIRE(t.brauer.size() == 1);
  CHECK(t.brauer[0].prime == 5);
  CHECK(t.brauer[0].characters.size() == 6);
  CHECK(t.exponent == 60);
}

TEST_CASE("S5 fixture against permutations") {
  const auto t = load_fixture("s5");
  const auto elements = testing::s5_elements();
  std::map<std::string, long> size;
  for (const auto& g : elements) ++size[testing::s5_label(g)];
  for (std::size_t x = 0; x < t.class_count(); ++x) {
    CHECK(t.class_size(x) == size.at(t.classes[x].id));
  }
  // power maps, and composed powers
  for (const auto& g : elements) {
    const auto x = t.class_index(testing::s5_label(g));
    for (long d = 1; d <= 12; ++d) CHECK(t.classes[t.class_of_power(x, d)].id == testing::s5_label(testing::power(g, d)));
  }
  // the sign and the permutation characters are characters of the fixture
  std::vector<CyclotomicNumber> sign(t.class_count()), standard(t.class_count());
  for (const auto& g : elements) {
    const auto x = t.class_index(testing::s5_label(g));
    sign[x] = testing::sign(g);
    standard[x] = testing::fixed_points(g) - 1;
  }
  bool has_sign = false, has_standard = false;
  for (const auto& chi : t.ordinary) {
    has_sign = has_sign || chi.values == sign;
    has_standard = has_standard || chi.values == standard;
  }
  CHECK(has_sign);
  CHECK(has_standard);
}

TEST_CASE("class_of_power") {
  const auto t = load_fixture("s5");
  const auto six = t.class_index("6a");
  CHECK(t.classes[t.class_of_power(six, 2)].id == "3a");
  CHECK(t.classes[t.class_of_power(six, 3)].id == "2b");
  for (std::size_t x = 0; x < t.class_count(); ++x) CHECK(t.class_of_power(x, 1) == x);
}

TEST_CASE("column orthogonality") {
  const auto t = load_fixture("s5");
  for (std::size_t x = 0; x < t.class_count(); ++x)
    for (std::size_t y = 0; y < t.class_count(); ++y) {
      CyclotomicNumber s;
      for (const auto& chi : t.ordinary) s += chi.values[x] * chi.values[y].conj();
      CHECK(s == CyclotomicNumber(x == y ? t.classes[x].centralizer_order : 0));
    }
}

TEST_CASE("character values of tuples") {
  const auto t = load_fixture("s5");
  const auto& phi1b = brauer(t, 5, "1b");
  CHECK(character_value_of_tuple(t, phi1b, PartialAugmentationTuple::basis(2, 7, t.class_index("2b"))) == CyclotomicNumber(-1));
  for (const auto& chi : t.ordinary)
    CHECK(character_value_of_tuple(t, chi, PartialAugmentationTuple::basis(1, 7, t.identity_class())) == chi.values[0]);
  const auto eps = tuple(t, 6, {{"2b", 1}, {"4a", -1}, {"6a", 1}});
  CHECK(character_value_of_tuple(t, brauer(t, 5, "5a"), eps) == CyclotomicNumber(3));
  // Brauer characters are not defined on p-singular support
  CHECK_THROWS_AS(character_value_of_tuple(t, phi1b, PartialAugmentationTuple::basis(5, 7, t.class_index("5a"))),
                  std::invalid_argument);
}

TEST_CASE("parse errors") {
  SUBCASE("degree zero") {
    auto doc = s5_document();
    for (auto& [id, v] : doc["ordinary"][0]["values"].items()) v = 0;
    CHECK_THROWS_AS(parse_table(doc), TableError);
  }
  SUBCASE("perturbed value breaks orthogonality") {
    auto doc = s5_document();
    doc["ordinary"][2]["values"]["3a"] = 1;
    try {
      parse_table(doc);
      FAIL("accepted a broken table");
    } catch (const TableError& e) {
      CHECK(std::string(e.what()).find("orthogonality") != std::string::npos);
    }
  }
  SUBCASE("inconsistent power map") {
    auto doc = s5_document();
    doc["power_maps"]["2"]["6a"] = "2b";
    CHECK_THROWS_AS(parse_table(doc), TableError);
  }
  SUBCASE("missing power map") {
    auto doc = s5_document();
    doc["power_maps"].erase("3");
    CHECK_THROWS_AS(parse_table(doc), TableError);
  }
  SUBCASE("unknown class") {
    auto doc = s5_document();
    doc["power_maps"]["2"]["6a"] = "7z";
    CHECK_THROWS_AS(parse_table(doc), TableError);
  }
  SUBCASE("Brauer value on a singular class") {
    auto doc = s5_document();
    doc["brauer"][0]["characters"][0]["values"]["5a"] = 1;
    CHECK_THROWS_AS(parse_table(doc), TableError);
  }
  SUBCASE("malformed text") { CHECK_THROWS(parse_table(std::string_view("{\"name\": "))); }
}

TEST_CASE("round trip") {
  const auto t = load_fixture("s5");
  CHECK(parse_table(serialize_table(t)) == t);
  CHECK(parse_table(std::string_view(serialize_table(t).dump())) == t);
  const auto p7 = generate_psl2(7, 1, true);
  CHECK(parse_table(serialize_table(p7)) == p7);
}

TEST_CASE("cyclotomic serialization") {
  CHECK(serialize_cyclotomic(CyclotomicNumber(5)) == 5);
  const auto a = CyclotomicNumber::root_of_unity(7, 3) + CyclotomicNumber(make_rational(1, 2));
  CHECK(parse_cyclotomic(serialize_cyclotomic(a)) == a);
  CHECK(parse_cyclotomic(json::parse(R"({"conductor": 4, "terms": [[3, 2, 1]]})")) ==
        CyclotomicNumber(make_rational(3, 2)) * CyclotomicNumber::root_of_unity(4));
}

TEST_CASE("decomposition matrix") {
  const auto t = load_fixture("s5");
  const auto rep = validate_decomposition(t, *t.block(5));
  CHECK(rep.ok());
  CHECK(rep.checked == 7 * 6);

  auto doc = s5_document();
  doc["brauer"][0]["decomposition"][2][2] = 0;  // chi_6 loses phi_3a
  const auto broken = parse_table(doc);
  const auto bad = validate_decomposition(broken, *broken.block(5));
  CHECK_FALSE(bad.ok());
  bool at_2a = false;
  for (const auto& f : bad.failures) at_2a = at_2a || (f.ordinary == "6a" && f.class_id == "2a");
  CHECK(at_2a);
}

TEST_CASE("decomposition on a small block") {
  // S3 mod 3: the degree 2 character restricts to 1a + 1b on the regular classes.
  const char* text = R"({
    "name": "S3", "order": 6, "exponent": 6,
    "classes": [{"id": "1a", "element_order": 1, "centralizer_order": 6},
                {"id": "2a", "element_order": 2, "centralizer_order": 2},
                {"id": "3a", "element_order": 3, "centralizer_order": 3}],
    "power_maps": {"2": {"1a": "1a", "2a": "1a", "3a": "3a"}, "3": {"1a": "1a", "2a": "2a", "3a": "1a"}},
    "ordinary": [{"name": "1a", "values": {"1a": 1, "2a": 1, "3a": 1}},
                 {"name": "1b", "values": {"1a": 1, "2a": -1, "3a": 1}},
                 {"name": "2a", "values": {"1a": 2, "2a": 0, "3a": -1}}],
    "brauer": [{"prime": 3, "regular_classes": ["1a", "2a"],
                "characters": [{"name": "1a", "values": {"1a": 1, "2a": 1}},
                               {"name": "1b", "values": {"1a": 1, "2a": -1}}],
                "decomposition": [[1, 0], [0, 1], [1, 1]]}]})";
  const auto t = parse_table(std::string_view(text));
  CHECK(validate_decomposition(t, *t.block(3)).ok());
  auto doc = json::parse(text);
  doc["brauer"][0]["decomposition"][2] = json::array({2, 0});
  const auto u = parse_table(doc);
  const auto rep = validate_decomposition(u, *u.block(3));
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].ordinary == "2a");
  CHECK(rep.failures[0].class_id == "2a");
}
