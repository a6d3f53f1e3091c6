#include <doctest.h>

#include "help/fixtures.hpp"
#include "help/oracle.hpp"
#include "help/psl2.hpp"

using namespace help;

TEST_CASE("brute force traces") {
  CHECK(oracle::trace_bruteforce(CyclotomicNumber::root_of_unity(8)) == 0);
  CHECK(oracle::trace_bruteforce(CyclotomicNumber::root_of_unity(8, 4)) == -4);
  CHECK(oracle::trace_bruteforce(CyclotomicNumber(1).embed(8)) == 4);
  CHECK(oracle::twisted_trace_bruteforce(CyclotomicNumber(1), 6, 0) == 2);
  CHECK(oracle::twisted_trace_bruteforce(CyclotomicNumber(1), 6, 3) == -2);
}

TEST_CASE("multiplicity audit") {
  CHECK(oracle::mu_group_element_audit(load_fixture("s5")).ok());
  for (long p : {5L, 7L, 11L, 13L}) CHECK(oracle::mu_group_element_audit(generate_psl2(p, 1, true)).ok());
  CHECK(oracle::mu_group_element_audit(generate_psl2(3, 2, true)).ok());
  CHECK(oracle::mu_group_element_audit(generate_psl2(5, 2, true)).ok());

  auto t = load_fixture("s5");
  const auto six = t.class_index("6a");
  t.power_maps[3][six] = t.class_index("2a");
  const auto rep = oracle::mu_group_element_audit(t);
  CHECK_FALSE(rep.ok());
  bool at_6a = false;
  for (const auto& v : rep.violations) at_6a = at_6a || v.class_id == "6a";
  CHECK(at_6a);
}
