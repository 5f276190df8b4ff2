#include <sstream>

#include "doctest.h"
#include "repgrowth/commands.hpp"

using namespace repgrowth;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json cli_json(std::vector<std::string> args, int expect_code = 0) {
  Run r = cli(args);
  CHECK(r.code == expect_code);
  return Json::parse(r.out);
}

// Same command in CSV form parses back to a table and re-emits identically.
void check_csv(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("csv");
  Run r = cli(args);
  Table t = parse_csv(r.out);
  CHECK(write_csv(t) == r.out);
  CHECK_FALSE(t.columns.empty());
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("bound") {
    Json a5 = cli_json({"bound", "--family", "A", "--rank", "5", "--n", "1000", "--p", "7"});
    CHECK(a5["value"]["kind"] == "interval");
    CHECK(a5["value"]["text"] == "n^(5/2)");
    CHECK(to_json(bound_report_from_json(a5)) == a5);

    Json c2 = cli_json({"bound", "--family", "C", "--rank", "2", "--n", "3", "--p", "3"});
    CHECK(c2["value"]["kind"] == "exact");
    CHECK(c2["value"]["value"] == "9");
    CHECK(c2["guard_detail"].get<std::string>().find("n < 4") != std::string::npos);

    Json b3 = cli_json({"bound", "--family", "B", "--rank", "3", "--n", "1", "--p", "5"});
    CHECK(b3["value"]["value"] == "1");

    check_csv({"bound", "--family", "E", "--rank", "6", "--n", "100", "--p", "5"});
  }

  TEST_CASE("usage and precondition errors are nonzero") {
    CHECK(cli({"bound", "--family", "A", "--rank", "2", "--n", "3"}).code == kExitUsage);
    CHECK(cli({"bound", "--family", "A", "--rank", "2", "--n", "3", "--p", "5", "--prec", "4096"}).code == kExitUsage);
    CHECK(cli({"frobnicate"}).code == kExitUsage);
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"bound", "--family", "B", "--rank", "1", "--n", "3", "--p", "5"}).code == kExitPrecondition);
    CHECK(cli({"bound", "--family", "A", "--rank", "2", "--n", "-3", "--p", "5"}).code == kExitPrecondition);
    CHECK(cli({"bound", "--family", "A", "--rank", "2", "--n", "3", "--p", "4"}).code == kExitPrecondition);
    CHECK(cli({"--help"}).code == 0);
  }

  TEST_CASE("witness") {
    Json m2 = cli_json({"witness", "middle2", "--rank", "3", "--weight", "2,0,1"});
    Weight mu = weight_from_json(m2["mu"]);
    CHECK(mu[1] > 0);
    CHECK(m2["transcript"]["chain_verified"] == true);
    CHECK(m2["transcript"]["bracket_lambda"] == m2["transcript"]["bracket_mu"]);
    WitnessChain ch = chain_from_json(m2["chain"]);
    CHECK(ch.verify(RootDatum::make(Family::A, 3)));

    Json g = cli_json({"witness", "good", "--rank", "2", "--weight", "2,2"});
    CHECK(is_good(weight_from_json(g["mu"])));

    Run bad = cli({"witness", "incr", "--rank", "3", "--weight", "1,0,0", "--m", "1"});
    CHECK(bad.code == kExitPrecondition);
    Json err = Json::parse(bad.out);
    CHECK(err["error"]["message"].get<std::string>().find("sum_{i=1}^m i*a_i > m") != std::string::npos);

    CHECK(cli({"witness", "incr", "--rank", "3", "--weight", "3,0,0"}).code == kExitPrecondition);
    CHECK(cli({"witness", "good", "--rank", "3", "--weight", "3,x,0"}).code == kExitPrecondition);
    CHECK(cli({"witness", "sideways", "--rank", "3", "--weight", "3,0,0"}).code == kExitUsage);

    Json a5 = cli_json({"witness", "a5", "--rank", "5", "--weight", "40,0,0,0,37"});
    CHECK(a5["members"].size() == 243);
    CHECK(a5["orbit_total"]["value"] == "174960");
    check_csv({"witness", "middle", "--rank", "5", "--weight", "0,0,3,0,0", "--m", "1"});
  }

  TEST_CASE("enumerate") {
    Json t = cli_json({"enumerate", "--family", "A", "--rank", "1", "--p", "7", "--n-max", "7", "--bound", "nlambda"});
    std::vector<std::string> counts;
    for (const auto& row : t["rows"]) counts.push_back(row["count"]["value"]);
    // N(a varpi) = 1 + 2 floor(a/2) for a = 0..6; row n counts a with N <= n
    CHECK(counts == std::vector<std::string>{"2", "2", "4", "4", "6", "6", "7"});
    for (const auto& row : t["rows"]) {
      quantity_from_json(row["theorem_bound"]);
      quantity_from_json(row["margin"]);
    }

    Json pr = cli_json({"enumerate", "--family", "A", "--rank", "2", "--p", "3", "--n-max", "10", "--bound", "premet"});
    CHECK(pr["weights"] == 9);
    const long c10 = std::stol(pr["rows"][9]["count"]["value"].get<std::string>());
    CHECK(c10 <= 6309);  // 10^3.8 ~ 6309.6

    Json empty = cli_json({"enumerate", "--family", "C", "--rank", "3", "--p", "5", "--n-max", "0", "--bound", "premet"});
    CHECK(empty["rows"].empty());

    Run capped = cli({"enumerate", "--family", "A", "--rank", "3", "--p", "5", "--n-max", "30", "--bound", "premet", "--cap", "3"});
    CHECK(capped.code == 2);
    Json cj = Json::parse(capped.out);
    CHECK(cj["rows"][0]["status"] == "ok");
    CHECK(cj["rows"][29]["status"].get<std::string>().find("cap exceeded") != std::string::npos);

    CHECK(cli({"enumerate", "--family", "B", "--rank", "3", "--p", "5", "--n-max", "5", "--bound", "nlambda"}).code ==
          kExitPrecondition);
    check_csv({"enumerate", "--family", "G", "--rank", "2", "--p", "5", "--n-max", "20", "--bound", "premet"});
  }

  TEST_CASE("mullineux") {
    CHECK(cli_json({"mullineux", "--p", "0", "--partition", "3,2"})["text"] == "2,2,1");
    Json p2 = cli_json({"mullineux", "--p", "2", "--partition", "4,3,1"});
    CHECK(partition_from_json(p2["image"]) == Partition({4, 3, 1}));
    CHECK(p2["involution_check"] == true);
    Run bad = cli({"mullineux", "--p", "3", "--partition", "2,2,2"});
    CHECK(bad.code == kExitPrecondition);
    CHECK(bad.err.find("part 2 repeats") != std::string::npos);
    check_csv({"mullineux", "--p", "5", "--partition", "6,4,4,1"});
  }

  TEST_CASE("verify") {
    Json part = cli_json({"verify", "--suite", "partitions"});
    bool saw = false;
    for (const auto& c : part["checks"])
      if (c["anchor"] == "p(21) = 792") saw = c["verdict"] == "pass";
    CHECK(saw);
    CHECK(to_json(suite_from_json(part)) == part);

    Json nona = cli_json({"verify", "--suite", "nonA"});
    bool zeta_c = false;
    for (const auto& c : nona["checks"])
      if (c["id"] == "nonA.zeta.C") zeta_c = c["verdict"] == "pass";
    CHECK(zeta_c);
    check_csv({"verify", "--suite", "char2"});
    CHECK(cli({"verify", "--suite", "bogus"}).code == kExitUsage);
  }
}
