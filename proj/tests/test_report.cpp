#include <doctest.h>

#include "genfam/report.hpp"

using namespace genfam;

namespace {

VerificationReport sample_report() {
  VerificationReport rep;
  rep.config.suite = "bundles";
  Check a;
  a.id = "x.first";
  a.anchor = "plain anchor";
  a.samples = 10;
  a.max_residual = 1e-13;
  a.tolerance = 1e-12;
  a.pass = true;
  Check b;
  b.id = "x.second";
  b.anchor = "anchor, with \"quotes\"";
  b.samples = 5;
  b.max_residual = 0.5;
  b.tolerance = 1e-10;
  b.pass = false;
  b.witness = {1.0, 2.0};
  rep.checks = {a, b};
  return rep;
}

}  // namespace

TEST_CASE("summary counts") {
  const VerificationReport rep = sample_report();
  CHECK(rep.passed() == 1);
  CHECK(rep.failed() == 1);
  CHECK_FALSE(rep.all_passed());
}

TEST_CASE("csv quoting follows RFC 4180") {
  CHECK(csv_field("plain") == "plain");
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("line\nbreak") == "\"line\nbreak\"");
}

TEST_CASE("csv rendering") {
  const std::string csv = report_to_csv(sample_report());
  CHECK(csv.rfind("id,anchor,samples,max_residual,tolerance,pass\r\n", 0) == 0);
  CHECK(csv.find("\"anchor, with \"\"quotes\"\"\"") != std::string::npos);
  CHECK(csv.find("\r\n") != std::string::npos);
  CHECK(csv.find("false") != std::string::npos);
}

TEST_CASE("json rendering carries config, checks and summary") {
  const std::string js = report_to_json(sample_report());
  CHECK(js.find("\"config\"") != std::string::npos);
  CHECK(js.find("\"checks\"") != std::string::npos);
  CHECK(js.find("\"summary\"") != std::string::npos);
  CHECK(js.find("\"suite\": \"bundles\"") != std::string::npos);
  CHECK(js.find("\"witness\"") != std::string::npos);
  CHECK(js.find("\"passed\": 1") != std::string::npos);
}
