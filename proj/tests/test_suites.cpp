#include <map>

#include "doctest.h"
#include "repgrowth/report_json.hpp"
#include "repgrowth/suites.hpp"

using namespace repgrowth;

namespace {

const VerificationSuite& all_desk() {
  static const VerificationSuite s = run_suite("all", Scale::desk);
  return s;
}

const SuiteCheck* find(const VerificationSuite& s, const std::string& id) {
  for (const auto& c : s.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("suites") {
  TEST_CASE("checks are sorted, unique, and carry an anchor") {
    const auto& s = all_desk();
    REQUIRE(s.checks.size() > 50);
    std::map<std::string, std::string> anchors;
    for (std::size_t i = 0; i < s.checks.size(); ++i) {
      if (i) CHECK(s.checks[i - 1].id < s.checks[i].id);
      CHECK_FALSE(s.checks[i].anchor.empty());
      anchors[s.checks[i].id] = s.checks[i].anchor;
    }
    CHECK(anchors.size() == s.checks.size());
  }

  TEST_CASE("external facts are never reported as pass") {
    std::size_t externals = 0;
    for (const auto& c : all_desk().checks) {
      if (c.id.find(".ext.") != std::string::npos) {
        ++externals;
        CHECK(c.verdict == SuiteVerdict::external_assumption);
      }
      if (c.verdict == SuiteVerdict::external_assumption) CHECK(c.id.find(".ext.") != std::string::npos);
    }
    CHECK(externals >= 10);
  }

  TEST_CASE("expected verdicts") {
    const auto& s = all_desk();
    for (const char* id : {"partitions.p21", "partitions.p39", "partitions.p60", "typeA.a5.family", "typeA.a5.ksum76",
                           "typeA.f1.730", "typeA.f4.d4", "typeA.ratio.factorials", "typeA.ratio.r10",
                           "symmetric.f5.1e13", "symmetric.f5.1e44", "nonA.zeta.C", "nonA.zeta.B", "nonA.zeta.D",
                           "nonA.zeta.E6", "nonA.zeta.E7", "nonA.zeta.E8", "nonA.zeta.F4", "char2.counts.range",
                           "typeA.witness.scan", "typeA.consistency.scan", "partitions.mullineux.involution",
                           "partitions.bound3.hook", "typeA.large.r3_needed"}) {
      const SuiteCheck* c = find(s, id);
      REQUIRE_MESSAGE(c != nullptr, id);
      CHECK_MESSAGE(c->verdict == SuiteVerdict::pass, id, ": ", c->detail);
    }
    // the literal margin at r = 3, n = 24 does not hold (about 1825 < 5000)
    const SuiteCheck* r3 = find(s, "typeA.large.r3_margin");
    REQUIRE(r3);
    CHECK(r3->verdict == SuiteVerdict::fail);
    CHECK(suite_exit_code(s) == 1);
    CHECK(suite_exit_code(run_suite("partitions", Scale::desk)) == 0);
  }

  TEST_CASE("deterministic across runs") {
    Json a = to_json(run_suite("nonA", Scale::desk));
    Json b = to_json(run_suite("nonA", Scale::desk));
    CHECK(a == b);
  }

  TEST_CASE("unknown ids and scales") {
    CHECK_THROWS_AS(run_suite("typeZ", Scale::desk), PreconditionError);
    CHECK_THROWS_AS(parse_scale("huge"), PreconditionError);
    CHECK(parse_suite_verdict("external-assumption") == SuiteVerdict::external_assumption);
  }

  TEST_CASE("exit codes") {
    VerificationSuite s{"x", Scale::desk, {{"x.a", "a", SuiteVerdict::pass, ""}}};
    CHECK(suite_exit_code(s) == 0);
    s.checks.push_back({"x.b", "b", SuiteVerdict::unknown, ""});
    CHECK(suite_exit_code(s) == 2);
    s.checks.push_back({"x.c", "c", SuiteVerdict::fail, ""});
    CHECK(suite_exit_code(s) == 1);
    s.checks = {{"x.e", "e", SuiteVerdict::external_assumption, ""}};
    CHECK(suite_exit_code(s) == 0);
  }
}
