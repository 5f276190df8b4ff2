#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "repgrowth/bounds.hpp"
#include "repgrowth/partitions.hpp"
#include "repgrowth/suites.hpp"
#include "repgrowth/witness.hpp"

namespace repgrowth {

using Json = nlohmann::ordered_json;

/// Malformed input to one of the *_from_json parsers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Every numeric field is an object tagged "kind": exact values carry a
// decimal string, intervals carry both endpoints in decimal and exact hex.
Json to_json(const Interval& x);
Interval interval_from_json(const Json& j);

Json to_json(const Quantity& q);
Quantity quantity_from_json(const Json& j);

Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

Json to_json(const Weight& w);
Weight weight_from_json(const Json& j);

Json to_json(const WitnessChain& c);
WitnessChain chain_from_json(const Json& j);

Json to_json(const CheckResult& c);
CheckResult check_from_json(const Json& j);

Json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const VerificationSuite& s);
VerificationSuite suite_from_json(const Json& j);

Verdict parse_verdict(const std::string& s);

/// Rectangular text table, the CSV form of every command.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  friend bool operator==(const Table&, const Table&) = default;
};

/// RFC 4180 quoting; rows end in "\n".
std::string write_csv(const Table& t);
/// Inverse of write_csv. Throws ParseError on ragged rows or bad quoting.
Table parse_csv(const std::string& text);

}  // namespace repgrowth
