#include <sstream>

#include "commands.hpp"
#include "hgm/report.hpp"
#include "support.hpp"

using namespace hgm;
using namespace hgm::test;

TEST_CASE("serialization formats") {
  CHECK(to_json(RationalAngle(13, 90)) == "13/90");
  CHECK(to_json(RationalAngle(0)) == "0");
  CHECK(to_json(Complex(1.5, -2)).dump() == "[1.5,-2.0]");
  const Json m = to_json(CMat3::identity());
  CHECK(m.size() == 3);
  CHECK(m[1][1].dump() == "[1.0,0.0]");
  CHECK(m[0][2].dump() == "[0.0,0.0]");
  const HgParameters p =
      HgParameters::make({RationalAngle(0), RationalAngle(1, 5), RationalAngle(4, 5)},
                         {RationalAngle(1, 6), RationalAngle(1, 2), RationalAngle(5, 6)});
  CHECK(to_json(p).dump() == R"({"alpha":["0","1/5","4/5"],"beta":["1/6","1/2","5/6"]})");
  BraidSignature b;
  b.v = {2, 3, std::nullopt, std::nullopt};
  CHECK(to_json(b) == "(2,3,inf;inf)");
}

TEST_CASE("census output is deterministic and ordered") {
  const Census a = run_census({}, true);
  const Census b = run_census({}, false);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(census_markdown(a) == census_markdown(b));

  const Json j = to_json(a);
  CHECK(j["excluded"].size() == 3);
  CHECK(j["covered"].size() + j["excluded"].size() == catalog().size());
  const Json& first = j["covered"][0];
  for (const char* key : {"family", "p", "classification_expected", "classification_computed", "params_expected",
                          "params_computed", "shift_used", "residuals", "pass"})
    CHECK(first.contains(key));
  CHECK(j["summary"]["failed"] == 5);
  CHECK_FALSE(a.pass);
}

TEST_CASE("markdown layout") {
  const std::string md = census_markdown(run_census());
  for (const char* heading : {"### (n,n,n;m)", "### (n,n,m;m)", "### (3,3,4;n)", "### (2,3,n;n)", "### (3,4,4;4)"})
    CHECK(md.find(heading) != std::string::npos);
  CHECK(md.find("(3), **4**, (6), (12)") != std::string::npos);
  CHECK(md.find("**9**") != std::string::npos);
}

TEST_CASE("cli commands") {
  cli::RunConfig cfg;
  std::ostringstream out;
  CHECK(cli::cmd_signature({"0", "1/5", "4/5"}, {"1/6", "1/2", "5/6"}, cfg, out) == 0);
  Json j = Json::parse(out.str());
  CHECK(j["bh"]["id"] == 5);
  CHECK(j["definite"] == true);

  out.str("");
  CHECK(cli::cmd_signature({"0", "1/3", "2/3"}, {"1/6", "1/2", "5/6"}, cfg, out) == 0);
  j = Json::parse(out.str());
  for (const auto& d : j["d"]) CHECK(d.get<double>() == doctest::Approx(2.0 / 3.0));

  try {
    cli::cmd_signature({"0", "0", "1/2"}, {"1/6", "1/3", "5/6"}, cfg, out);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RepeatedEigenvalue);
  }

  out.str("");
  CHECK(cli::cmd_bh(7, cfg, out) == 0);
  j = Json::parse(out.str());
  CHECK(j["params_computed"]["alpha"] == Json::array({"1/6", "11/30", "29/30"}));
  CHECK(j["params_computed"]["beta"] == Json::array({"0", "1/5", "4/5"}));

  out.str("");
  CHECK(cli::cmd_abelianize(6, cfg, out) == 0);
  j = Json::parse(out.str());
  CHECK(j["obstructed"] == true);
  CHECK(j["group"] == "Z3 x Z6 x Z6");

  out.str("");
  CHECK(cli::cmd_build("threefold", {3, 2}, 9, cfg, out) == 0);
  j = Json::parse(out.str());
  CHECK(j["nonarithmetic"] == true);
  CHECK(j["pass"] == true);

  cli::RunConfig bad = cfg;
  bad.max_denominator = 89;
  CHECK_THROWS_AS(cli::cmd_census(bad, out), Error);
  bad = cfg;
  bad.tolerance = 1e-2;
  CHECK_THROWS_AS(cli::cmd_census(bad, out), Error);
}

TEST_CASE("cli argument parsing helpers") {
  CHECK(cli::parse_family("TwoFold", {4, 3}) == FamilyId::two_fold(4, 3));
  CHECK(cli::parse_family("f344", {}) == FamilyId::f344());
  CHECK_THROWS_AS(cli::parse_family("f334", {}), Error);
  CHECK_THROWS_AS(cli::parse_family("fourfold", {1}), Error);
  CHECK(cli::parse_complex("1.5,-2") == Complex(1.5, -2));
  CHECK(cli::parse_complex("0.25") == Complex(0.25, 0));
  CHECK_THROWS_AS(cli::parse_complex("1,2,3"), Error);
  CHECK_THROWS_AS(cli::parse_complex("x"), Error);
}
