#include <catch2/catch_amalgamated.hpp>

#include "jackmaps/verify.hpp"

using namespace jackmaps;

TEST_CASE("worked example suite passes") {
  VerificationReport r = verify_klein_example();
  CHECK(r.suite == "klein-example");
  CHECK(r.pass());
  CHECK(r.failures() == 0);
  CHECK(r.cases.size() == 3);
}

TEST_CASE("classification golden suite passes") {
  VerificationReport r = verify_classification_golden();
  CHECK(r.pass());
  CHECK(r.cases.size() == 4);
  for (const auto& c : r.cases) CHECK(c.pass);
}

TEST_CASE("report emitters are deterministic") {
  VerificationReport a = verify_klein_example();
  VerificationReport b = verify_klein_example();
  CHECK(report_text(a) == report_text(b));
  CHECK(report_json(a).dump() == report_json(b).dump());
  CHECK(report_csv(a) == report_csv(b));
}

TEST_CASE("report formats") {
  VerificationReport r;
  r.suite = "demo";
  r.config.emplace_back("alpha", "2");
  report_case(r, "first", true, "1", "1");
  report_case(r, "second", false, "a,b", "c\"d");
  CHECK_FALSE(r.pass());
  CHECK(r.failures() == 1);

  std::string text = report_text(r);
  CHECK(text.find("suite demo\n") == 0);
  CHECK(text.find("config alpha=2\n") != std::string::npos);
  CHECK(text.find("PASS first: 1 == 1\n") != std::string::npos);
  CHECK(text.find("FAIL second: a,b != c\"d\n") != std::string::npos);
  CHECK(text.find("result FAIL 1/2\n") != std::string::npos);

  Json j = report_json(r);
  CHECK(j["suite"] == "demo");
  CHECK(j["config"]["alpha"] == "2");
  CHECK(j["cases"].size() == 2);
  CHECK(j["cases"][1]["pass"] == false);
  CHECK(j["failures"] == 1);
  CHECK(j["pass"] == false);

  std::string csv = report_csv(r);
  CHECK(csv.find("suite,case,status,left,right\n") == 0);
  CHECK(csv.find("\"demo\",\"second\",fail,\"a,b\",\"c\"\"d\"\n") != std::string::npos);
}

TEST_CASE("csv quoting") {
  CHECK(csv_quote("plain") == "\"plain\"");
  CHECK(csv_quote("a,b") == "\"a,b\"");
  CHECK(csv_quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_quote("") == "\"\"");
}

TEST_CASE("suite registry") {
  const auto& reg = suite_registry();
  REQUIRE(reg.size() == 14);
  for (size_t i = 0; i < reg.size(); ++i) CHECK(reg[i].criterion == i + 1);
  CHECK(find_suite("klein-example") == &reg[0]);
  CHECK(find_suite("counterexample") == &reg[13]);
  CHECK(find_suite("nonexistent") == nullptr);
  // every registered name resolves back to its entry
  for (const auto& e : reg) CHECK(find_suite(e.name) == &e);
}
