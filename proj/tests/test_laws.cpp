#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <string>

#include "injspec/laws.hpp"

using namespace injspec;

namespace {

template <class Fn>
std::optional<errc> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const domain_error& e) {
    return e.code();
  }
  return std::nullopt;
}

const LawSuite& suite_named(const LawReport& r, const std::string& name) {
  for (const LawSuite& s : r.suites)
    if (s.name == name) return s;
  FAIL("missing suite " + name);
  return r.suites.front();
}

}  // namespace

TEST_CASE("the full law run passes deterministically") {
  LawReport a = check_laws("all", 0);
  REQUIRE(a.suites.size() == law_suite_names().size());
  for (size_t i = 0; i < a.suites.size(); ++i) CHECK(a.suites[i].name == law_suite_names()[i]);
  for (const LawSuite& s : a.suites) {
    INFO(s.name << " first counterexample: " << s.first_counterexample << " " << s.first_detail);
    CHECK(s.fail_count == 0);
    CHECK(s.pass_count > 0);
  }
  CHECK(a.all_pass());

  LawReport b = check_laws("all", 0);
  REQUIRE(b.suites.size() == a.suites.size());
  for (size_t i = 0; i < a.suites.size(); ++i) {
    CHECK(a.suites[i].pass_count == b.suites[i].pass_count);
    CHECK(a.suites[i].fail_count == b.suites[i].fail_count);
  }
}

TEST_CASE("single suites run standalone with the same counts") {
  LawReport all = check_laws("all", 7);
  LawReport one = check_laws("union", 7);
  REQUIRE(one.suites.size() == 1);
  CHECK(one.suites[0].name == "union");
  CHECK(one.suites[0].pass_count == suite_named(all, "union").pass_count);

  // enough instances behind the acceptance thresholds
  CHECK(one.suites[0].pass_count >= 150);
  CHECK(suite_named(all, "hom").pass_count >= 100);
  CHECK(suite_named(all, "intersection").pass_count >= 150);
  CHECK(suite_named(all, "thm614").pass_count >= 5);
  CHECK(suite_named(all, "thm73").pass_count >= 5);
}

TEST_CASE("seeds vary the random instances but not the verdict") {
  for (std::uint64_t seed : {1ULL, 42ULL, 1234567ULL}) {
    LawReport r = check_laws("union", seed);
    INFO("seed " << seed << " first counterexample: " << r.suites[0].first_counterexample);
    CHECK(r.all_pass());
  }
}

TEST_CASE("unknown suites are rejected") {
  CHECK(thrown_code([] { check_laws("nonsense"); }) == errc::invalid_input);
}
