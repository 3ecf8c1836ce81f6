#include <regex>

#include "doctest.h"
#include "dadelab/harness.hpp"

using namespace dadelab;
using namespace dadelab::harness;

namespace {

std::string without_timings(std::string json) {
  return std::regex_replace(json, std::regex("\"elapsed_ms\":[0-9]+"), "\"elapsed_ms\":0");
}

}  // namespace

TEST_CASE("registry") {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  CHECK(ids == std::vector<std::string>{"D1", "D2", "D3", "D4", "D5", "D6", "S1", "S2", "S3", "K1", "T1", "P1", "O1"});
  CHECK(applies("D2", *catalog::build_group("C8")));
  CHECK_FALSE(applies("D2", *catalog::build_group("Q8")));
  CHECK(applies("D6", *catalog::build_group("C9")));
  CHECK_THROWS_AS(applies("X9", *catalog::build_group("C2")), InvalidArgument);
}

TEST_CASE("empty suite and reports") {
  const auto none = run_suite({}, 16, 42);
  CHECK(none.empty());
  CHECK(exit_code(none) == 0);
  CHECK(report_text(none).find("passed=0 failed=0 unresolved=0") != std::string::npos);
  CHECK(report_json(none).empty());

  CheckResult ok{"D1", "C2", 2, 1, 16, Status::kPass, "fine", 3, 42};
  CHECK(exit_code({ok}) == 0);
  CheckResult bad = ok;
  bad.status = Status::kFail;
  bad.details = "g=1 det=1";
  CHECK(exit_code({ok, bad}) == 1);
  const std::string text = report_text({ok, bad});
  CHECK(text.find("g=1 det=1") != std::string::npos);
  CHECK(text.find("passed=1 failed=1 unresolved=0") != std::string::npos);
  CHECK(report_json({bad}) ==
        "{\"check_id\":\"D1\",\"group\":\"C2\",\"p\":2,\"n\":1,\"N\":16,\"status\":\"fail\","
        "\"details\":\"g=1 det=1\",\"elapsed_ms\":3,\"seed\":42}\n");
}

TEST_CASE("suite on C2 and C4") {
  const auto c2 = run_suite({"C2"}, 16, 42);
  CHECK(exit_code(c2) == 0);
  bool saw_d1 = false;
  for (const auto& r : c2) {
    CHECK_MESSAGE(r.status == Status::kPass, std::string(r.check_id + ": " + r.details));
    saw_d1 = saw_d1 || r.check_id == "D1";
  }
  CHECK(saw_d1);

  const auto d4 = run_suite({"C4"}, 16, 42, {"D4"});
  REQUIRE(d4.size() == 1);
  CHECK(d4[0].status == Status::kPass);
  CHECK(d4[0].details.find("omega witness 3x3") != std::string::npos);
}

TEST_CASE("suite arguments") {
  CHECK_THROWS_AS(run_suite({"C2"}, 16, 42, {"Z1"}), InvalidArgument);
  CHECK_THROWS_AS(run_suite({"C6"}, 16, 42), InvalidArgument);
  CHECK_THROWS_AS(run_suite({"C2"}, 3, 42), InvalidArgument);
  // D2 does not apply to Q8.
  CHECK(run_suite({"Q8"}, 16, 42, {"D2"}).empty());
}

TEST_CASE("reports are deterministic up to timings") {
  const std::vector<std::string> groups{"C4", "Q8"};
  const std::vector<std::string> suite{"D5", "S2", "T1", "K1"};
  const auto a = report_json(run_suite(groups, 16, 42, suite));
  const auto b = report_json(run_suite(groups, 16, 42, suite));
  CHECK(without_timings(a) == without_timings(b));
}
