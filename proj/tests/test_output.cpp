#include <doctest.h>

#include "weave3/output.hpp"
#include "weave3/verify.hpp"

using namespace weave3;

TEST_CASE("records round-trip through json") {
  OutputRecord r;
  r.kind = "alexander";
  r.variable = "s";
  r.offset = -2;
  r.coefficients = {"1", "3", "1"};
  r.extras["n"] = 2;
  r.extras["route"] = "division";
  const OutputRecord back = record_from_json(record_to_json(r));
  CHECK(back == r);

  // big coefficients survive as decimal strings
  OutputRecord big;
  big.kind = "jones";
  big.variable = "s";
  big.coefficients = {"123456789012345678901234567890123456789"};
  const OutputRecord big_back =
      record_from_json(nlohmann::json::parse(record_to_json(big).dump()));
  CHECK(big_back.coefficients == big.coefficients);
}

TEST_CASE("row string conversions are lossless") {
  const CoeffRow row = {BigInt("99999999999999999999999999"), -3, 0, 1};
  CHECK(row_from_strings(row_to_strings(row)) == row);
}

TEST_CASE("table families") {
  const auto whitney = whitney_table(3);
  REQUIRE(whitney.size() == 4);
  CHECK(whitney[0] == CoeffRow{2});
  CHECK(whitney[1] == CoeffRow{1, 1, 1});
  CHECK(whitney[2] == CoeffRow{1, 2, 1, 2, 1});
  CHECK(whitney[3] == CoeffRow{1, 3, 3, 4, 3, 3, 1});

  const auto alex = alexander_table(3);
  REQUIRE(alex.size() == 3);
  CHECK(alex[0] == CoeffRow{1});
  CHECK(alex[1] == CoeffRow{1, 3, 1});
  CHECK(alex[2] == CoeffRow{1, 4, 6, 4, 1});

  const auto jones = jones_table(2);
  REQUIRE(jones.size() == 2);
  CHECK(jones[0] == CoeffRow{0, 1, 0});
  CHECK(jones[1] == CoeffRow{1, 1, 1, 1, 1});
}

TEST_CASE("table csv layout") {
  CHECK(render_table_csv("alexander", 2) == "1,1\n2,1,3,1\n");
  CHECK(render_table_csv("whitney", 1) == "0,2\n1,1,1,1\n");
  CHECK_THROWS_AS(render_table_csv("nope", 2), Error);
}

TEST_CASE("formats carry the same numeric content") {
  const OutputRecord r = record_for_table("alexander", 3);
  const std::string csv = render_record(r, Format::csv);
  CHECK(csv == render_table_csv("alexander", 3));
  const std::string json_text = render_record(r, Format::json);
  const OutputRecord back = record_from_json(nlohmann::json::parse(json_text));
  CHECK(render_record(back, Format::csv) == csv);
  const std::string text = render_record(r, Format::text);
  CHECK(text.find("1 4 6 4 1") != std::string::npos);
}

TEST_CASE("verification runner") {
  VerifyOptions options;
  options.max_n = 8;
  options.max_m = 2;
  const auto results = run_verification(options);
  CHECK(results.size() == 7);
  CHECK(all_passed(results));
  for (const auto& r : results) CHECK(r.cases > 0);

  // restricting suites runs just those, in declaration order
  options.suites = {"whitney-routes"};
  const auto one = run_verification(options);
  REQUIRE(one.size() == 1);
  CHECK(one[0].suite == "whitney-routes");
  CHECK(one[0].passed);

  // fault injection must produce a located mismatch
  options.inject_whitney_fault = true;
  const auto faulty = run_verification(options);
  REQUIRE(faulty.size() == 1);
  CHECK_FALSE(faulty[0].passed);
  CHECK(faulty[0].detail.find("n=2") != std::string::npos);

  // the convention notes are part of every report
  const auto notes = verification_notes();
  CHECK(notes.size() >= 2);
  bool mentions_sign = false;
  bool mentions_lucas_seeds = false;
  for (const auto& note : notes) {
    if (note.find("sign") != std::string::npos) mentions_sign = true;
    if (note.find("L(m,1) = m") != std::string::npos) mentions_lucas_seeds = true;
  }
  CHECK(mentions_sign);
  CHECK(mentions_lucas_seeds);
}
