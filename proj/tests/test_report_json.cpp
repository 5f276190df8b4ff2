#include "doctest.h"
#include "repgrowth/report_json.hpp"

using namespace repgrowth;

TEST_SUITE("report_json") {
  TEST_CASE("quantities carry a kind tag and round-trip") {
    Quantity e = Quantity::of(mpz_class("123456789012345678901234567890"), "big");
    Json je = to_json(e);
    CHECK(je["kind"] == "exact");
    CHECK(je["value"] == "123456789012345678901234567890");
    CHECK(to_json(quantity_from_json(je)) == je);

    Quantity i = Quantity::of(zeta(2, 256), "zeta(2)");
    Json ji = to_json(i);
    CHECK(ji["kind"] == "interval");
    CHECK(ji.contains("lo"));
    CHECK(ji.contains("hi"));
    Quantity back = quantity_from_json(Json::parse(ji.dump()));
    CHECK(back.interval->lo_hex() == i.interval->lo_hex());
    CHECK(back.interval->hi_hex() == i.interval->hi_hex());
    CHECK(to_json(back) == ji);

    Json jx = to_json(Quantity::external("tables"));
    CHECK(jx["kind"] == "external");
    CHECK(quantity_from_json(jx).kind == QuantityKind::external);
  }

  TEST_CASE("bound reports round-trip") {
    for (auto [f, r, n, p] : std::vector<std::tuple<Family, int, long, int>>{
             {Family::A, 5, 1000, 7}, {Family::C, 2, 3, 3}, {Family::D, 3, 24, 5}, {Family::A, 3, 3787, 5}, {Family::E, 8, 9, 2}}) {
      Json j = to_json(rn_upper(f, r, n, p));
      BoundReport back = bound_report_from_json(Json::parse(j.dump(2)));
      CHECK(to_json(back) == j);
    }
  }

  TEST_CASE("certificates, weights, chains, partitions") {
    Certificate c = certify(Relation::less_equal, [](mpfr_prec_t p) {
      return std::make_pair(Interval::from_int(1, p), Interval::pi(p));
    });
    CHECK(to_json(certificate_from_json(to_json(c))) == to_json(c));
    Weight w({3, -1, 0});
    CHECK(weight_from_json(to_json(w)) == w);
    WitnessChain ch{Weight({2, 0}), Weight({0, 1}), {1, 0}};
    WitnessChain ch2 = chain_from_json(to_json(ch));
    CHECK(ch2.source == ch.source);
    CHECK(ch2.target == ch.target);
    CHECK(ch2.root_coeffs == ch.root_coeffs);
    Partition p({4, 2, 2});
    CHECK(partition_from_json(to_json(p)) == p);
  }

  TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(quantity_from_json(Json{{"kind", "bogus"}, {"text", ""}}), ParseError);
    CHECK_THROWS_AS(quantity_from_json(Json{{"kind", "exact"}, {"value", "12a"}, {"text", ""}}), ParseError);
    CHECK_THROWS_AS(weight_from_json(Json{{"a", 1}}), ParseError);
    CHECK_THROWS_AS(partition_from_json(Json{{"parts", {1, 2}}, {"size", 3}}), ParseError);
    CHECK_THROWS_AS(partition_from_json(Json{{"parts", {2, 1}}, {"size", 4}}), ParseError);
    CHECK_THROWS_AS(parse_verdict("maybe"), ParseError);
  }

  TEST_CASE("suites round-trip") {
    VerificationSuite s{"demo", Scale::desk, {{"demo.a", "x < y", SuiteVerdict::pass, "ok"},
                                              {"demo.b", "tables", SuiteVerdict::external_assumption, ""}}};
    Json j = to_json(s);
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["external-assumption"] == 1);
    CHECK(to_json(suite_from_json(j)) == j);
  }

  TEST_CASE("csv quoting round-trips") {
    Table t{{"id", "text"}, {{"1", "plain"}, {"2", "with, comma"}, {"3", "quote \" inside"}, {"4", "two\nlines"}, {"5", ""}}};
    const std::string csv = write_csv(t);
    CHECK(parse_csv(csv) == t);
    CHECK(write_csv(parse_csv(csv)) == csv);
    CHECK_THROWS_AS(parse_csv("a,b\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_csv("a\n\"open\n"), ParseError);
    CHECK_THROWS_AS(parse_csv(""), ParseError);
  }
}
