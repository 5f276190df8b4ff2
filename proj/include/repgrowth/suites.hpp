#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "repgrowth/interval.hpp"

namespace repgrowth {

enum class Scale { desk, extended };
Scale parse_scale(const std::string& s);
const char* scale_name(Scale s);

enum class SuiteVerdict { pass, fail, unknown, external_assumption };
const char* suite_verdict_name(SuiteVerdict v);
SuiteVerdict parse_suite_verdict(const std::string& s);

struct SuiteCheck {
  std::string id;
  std::string anchor;  // formula the check evaluates
  SuiteVerdict verdict = SuiteVerdict::unknown;
  std::string detail;
};

struct VerificationSuite {
  std::string id;
  Scale scale = Scale::desk;
  std::vector<SuiteCheck> checks;  // sorted by id
};

/// typeA, char2, nonA, partitions, symmetric.
const std::vector<std::string>& suite_ids();

/// Runs one suite, or every suite for id "all". Throws PreconditionError on an
/// unknown id.
VerificationSuite run_suite(const std::string& id, Scale scale, PrecisionPolicy policy = {},
                            std::size_t cap = 10'000'000);

/// 0 if no check failed, 1 if any failed, 2 if none failed but some are unknown.
int suite_exit_code(const VerificationSuite& suite);

}  // namespace repgrowth
