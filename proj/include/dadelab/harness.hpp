#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dadelab/pgroup.hpp"

namespace dadelab::harness {

enum class Status { kPass, kFail, kUnresolved };
std::string to_string(Status s);

struct CheckResult {
  std::string check_id;
  std::string group;
  int p = 0;
  int n = 0;
  int N = 0;
  Status status = Status::kFail;
  std::string details;
  std::int64_t elapsed_ms = 0;
  std::uint64_t seed = 0;
};

struct CheckInfo {
  std::string id;
  std::string statement;
};

/// Registered checks in report order.
const std::vector<CheckInfo>& registry();
bool applies(const std::string& check_id, const PGroup& P);

inline constexpr int kDefaultPrecision = 16;
inline constexpr std::uint64_t kDefaultSeed = 42;
/// Order bound used by S2, S3 and the order checks of the suite.
inline constexpr std::size_t kSuiteOrderBound = 4;

/// Runs one check on one group. Exceptions become failures.
CheckResult run_check(const std::string& check_id, const std::string& group, int N, std::uint64_t seed);

/// Every selected check for every group it applies to, in registry order.
/// An empty suite selects all checks. Throws InvalidArgument for unknown
/// check ids or group specs, or when N < 4.
std::vector<CheckResult> run_suite(const std::vector<std::string>& groups, int N, std::uint64_t seed,
                                   const std::vector<std::string>& suite = {});

std::string report_text(const std::vector<CheckResult>& results);
/// One JSON object per line.
std::string report_json(const std::vector<CheckResult>& results);
/// 0 when nothing failed, 1 otherwise.
int exit_code(const std::vector<CheckResult>& results);

}  // namespace dadelab::harness
