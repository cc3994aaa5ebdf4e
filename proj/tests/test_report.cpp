#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cyclo/report.hpp"

using cyclo::CheckStatus;
using cyclo::run_checks;
using cyclo::VerificationRecord;

namespace {

const std::vector<std::string> kCheckNames = {
    "closed-vs-series", "conductor-discriminant", "dedekind", "descent",
    "euler-factor",     "gauss-magnitude",        "orthogonality", "ratio"};

}  // namespace

TEST_CASE("json round-trip is byte identical") {
  VerificationRecord r;
  r.modulus = 16;
  r.check = "ratio";
  r.status = CheckStatus::pass;
  r.residual = 3.5527136788005009e-15;
  r.details = "ratio 1.0000000000000002 vs |eta| 1, quotes \" and commas , included";
  std::string line = cyclo::to_json_line(r);
  auto back = cyclo::from_json_line(line);
  CHECK(cyclo::to_json_line(back) == line);
  CHECK(back.modulus == r.modulus);
  CHECK(back.check == r.check);
  CHECK(back.status == r.status);
  CHECK(back.residual == r.residual);  // exact, not approximate
  CHECK(back.details == r.details);
}

TEST_CASE("json line shape: single line, sorted keys") {
  VerificationRecord r;
  r.modulus = 5;
  r.check = "gauss-magnitude";
  r.status = CheckStatus::fail;
  r.residual = 0.5;
  r.details = "x";
  std::string line = cyclo::to_json_line(r);
  CHECK(line.find('\n') == std::string::npos);
  auto pos = [&](const char* k) { return line.find(std::string{"\""} + k + "\""); };
  CHECK(pos("check") < pos("details"));
  CHECK(pos("details") < pos("modulus"));
  CHECK(pos("modulus") < pos("residual"));
  CHECK(pos("residual") < pos("status"));
  CHECK(line.find("\"fail\"") != std::string::npos);
}

TEST_CASE("csv escapes embedded quotes and commas") {
  VerificationRecord r;
  r.modulus = 7;
  r.check = "dedekind";
  r.status = CheckStatus::pass;
  r.residual = 0.0;
  r.details = "say \"hi\", twice";
  CHECK(cyclo::csv_header() == "modulus,check,status,residual,details");
  std::string line = cyclo::to_csv_line(r);
  CHECK(line.substr(0, 2) == "7,");
  CHECK(line.find("\"say \"\"hi\"\", twice\"") != std::string::npos);
}

TEST_CASE("battery emits the full check list in order") {
  for (std::int64_t m : {5, 12, 16}) {
    CAPTURE(m);
    auto records = run_checks(m);
    REQUIRE(records.size() == kCheckNames.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      CHECK(records[i].check == kCheckNames[i]);
      CHECK(records[i].modulus == m);
    }
  }
}

TEST_CASE("regular prime power passes everything applicable") {
  // m = 5 and 9 have no imprimitive even characters, so descent is skipped
  // there; every check that runs must pass.
  for (std::int64_t m : {5, 9, 16, 25}) {
    CAPTURE(m);
    for (const auto& r : run_checks(m)) {
      CAPTURE(r.check);
      if (r.check == "descent" && (m == 5 || m == 9)) {
        CHECK(r.status == CheckStatus::skipped);
      } else {
        CHECK(r.status == CheckStatus::pass);
      }
    }
  }
}

TEST_CASE("singular modulus still passes through the singular branch") {
  auto records = run_checks(17);
  for (const auto& r : records) {
    CAPTURE(r.check);
    if (r.check == "descent") {
      CHECK(r.status == CheckStatus::skipped);  // 17 is prime, nothing to descend
      continue;
    }
    CHECK(r.status == CheckStatus::pass);
    if (r.check == "ratio") CHECK(r.details.find("singular") != std::string::npos);
  }
}

TEST_CASE("composite modulus skips the prime power checks") {
  auto records = run_checks(15);
  for (const auto& r : records) {
    CAPTURE(r.check);
    if (r.check == "ratio" || r.check == "descent") {
      CHECK(r.status == CheckStatus::skipped);
    } else {
      CHECK(r.status == CheckStatus::pass);
    }
  }
}

TEST_CASE("two mod four moduli are skipped entirely") {
  auto records = run_checks(6);
  REQUIRE(records.size() == kCheckNames.size());
  for (const auto& r : records) {
    CHECK(r.status == CheckStatus::skipped);
    CHECK(r.details.find("2 (mod 4)") != std::string::npos);
  }
}

TEST_CASE("large dedekind groups are skipped with a reason") {
  auto records = run_checks(53);  // |G| = 26 > 24
  bool saw = false;
  for (const auto& r : records) {
    if (r.check != "dedekind") continue;
    saw = true;
    CHECK(r.status == CheckStatus::skipped);
    CHECK_FALSE(r.details.empty());
  }
  CHECK(saw);
}

TEST_CASE("tight tolerances force failures") {
  cyclo::Tolerances tol;
  tol.det = 1e-20;
  auto records = run_checks(5, tol);
  bool failed = false;
  for (const auto& r : records)
    if (r.check == "dedekind") failed = r.status == CheckStatus::fail;
  CHECK(failed);
  // Failing records still serialize and round-trip.
  for (const auto& r : records) {
    auto line = cyclo::to_json_line(r);
    CHECK(cyclo::to_json_line(cyclo::from_json_line(line)) == line);
  }
}

TEST_CASE("status strings") {
  CHECK(std::string{cyclo::to_string(CheckStatus::pass)} == "pass");
  CHECK(std::string{cyclo::to_string(CheckStatus::fail)} == "fail");
  CHECK(std::string{cyclo::to_string(CheckStatus::skipped)} == "skipped");
}

TEST_CASE("battery rejects tiny moduli") {
  CHECK_THROWS_AS(run_checks(2), std::invalid_argument);
  CHECK_THROWS_AS(run_checks(1), std::invalid_argument);
}
