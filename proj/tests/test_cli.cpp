#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "json.hpp"

#include "cli/run.hpp"
#include "cli/spec.hpp"
#include "flagphase/rational.hpp"

using flagphase::parse_rational;
using flagphase::Rational;
using flagphase::to_double;
using namespace flagphase::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto r = invoke(args);
  EXPECT_TRUE(r.code == 0 || r.code == 3) << r.err;
  return nlohmann::json::parse(r.out);
}

void expect_float_matches(const nlohmann::json& exact, const nlohmann::json& approx, const std::string& where) {
  if (exact.is_string()) {
    Rational q;
    try {
      q = parse_rational(exact.get<std::string>());
    } catch (...) {
      return;  // textual field
    }
    ASSERT_TRUE(approx.is_number()) << where;
    const double f = approx.get<double>();
    EXPECT_LE(std::abs(to_double(q) - f), 1e-12 * std::max(1.0, std::abs(f))) << where;
  } else if (exact.is_array()) {
    ASSERT_TRUE(approx.is_array()) << where;
    ASSERT_EQ(exact.size(), approx.size()) << where;
    for (std::size_t i = 0; i < exact.size(); ++i) expect_float_matches(exact[i], approx[i], where + "[" + std::to_string(i) + "]");
  } else if (exact.is_object()) {
    for (const auto& [k, v] : exact.items()) expect_float_matches(v, approx.at(k), where + "." + k);
  }
}

void expect_round_trip(const nlohmann::json& doc) {
  for (const auto& key : {"command", "inputs", "exact", "float", "verdicts"}) ASSERT_TRUE(doc.contains(key)) << key;
  for (const auto& [k, v] : doc["exact"].items()) {
    if (!doc["float"].contains(k)) continue;
    expect_float_matches(v, doc["float"][k], doc["command"].get<std::string>() + "." + k);
  }
}

const std::vector<std::string> kWallach = {"--type", "A2", "--parabolic", "", "--omega", "2,2"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

std::vector<std::string> wallach(const std::string& cmd, const std::vector<std::string>& extra = {}) {
  return with(with({cmd}, kWallach), extra);
}

}  // namespace

TEST(Cli, PhaseHypercritical) {
  const auto doc = invoke_json(wallach("phase", {"--psi", "4,4"}));
  EXPECT_NEAR(doc["float"]["theta_hat"].get<double>(), 3 * std::atan(2.0), 1e-12);
  EXPECT_EQ(doc["verdicts"]["window"], "hypercritical");
  EXPECT_EQ(doc["exact"]["eigenvalues"], nlohmann::json::array({"2", "2", "2"}));
}

TEST(Cli, PhaseZeroAndNegative) {
  const auto zero = invoke_json(wallach("phase", {"--psi", "0,0"}));
  EXPECT_EQ(zero["float"]["theta_hat"].get<double>(), 0.0);
  EXPECT_EQ(zero["verdicts"]["window"], "subcritical");
  const auto neg = invoke_json(wallach("phase", {"--psi=-1,-1"}));
  EXPECT_EQ(neg["verdicts"]["window"], "subcritical");
}

TEST(Cli, SlopeExactAndHumanOutput) {
  const auto r = invoke(wallach("slope", {"--bundle", "1,1"}));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("slope = 24  (24)"), std::string::npos) << r.out;
  const auto doc = invoke_json(wallach("slope", {"--bundle", "1,1"}));
  EXPECT_EQ(doc["exact"]["slope"], "24");
  const auto frac = invoke(wallach("muhat", {"--bundle", "1,0"}));
  EXPECT_NE(frac.out.find("mu_hat = 3/4  (0.75)"), std::string::npos) << frac.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kParseError);
  EXPECT_EQ(invoke({"nonsense"}).code, kParseError);
  EXPECT_EQ(invoke(wallach("slope", {"--bundle", "1,x"})).code, kParseError);
  EXPECT_EQ(invoke(wallach("charge", {"--psi", "1,1", "--target", "surface"})).code, kParseError);
  EXPECT_EQ(invoke({"volume", "--type", "A2", "--parabolic", "", "--omega", "0,1"}).code, kDomainError);
  EXPECT_EQ(invoke({"roots", "--type", "E9"}).code, kDomainError);
  EXPECT_EQ(invoke(wallach("slope", {"--bundle", "1,1,1"})).code, kDomainError);
  EXPECT_EQ(invoke({"classify", "--theta", "3.14159265358979", "--n", "3"}).code, kBoundaryAmbiguous);
  EXPECT_EQ(invoke({"phase", "--type", "A1", "--omega", "1", "--psi", "0"}).code, kBoundaryAmbiguous);
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, kOk);
  EXPECT_NE(help.out.find("hr-matrix"), std::string::npos);
  const auto err = invoke({"volume", "--type", "A2", "--omega", "0,1"});
  EXPECT_NE(err.err.find("NotKahler"), std::string::npos) << err.err;
}

TEST(Cli, EveryCommandRoundTrips) {
  const std::vector<std::vector<std::string>> cases = {
      {"roots", "--type", "G2"},
      wallach("flag-info"),
      wallach("volume"),
      wallach("degree", {"--bundle", "1,0"}),
      wallach("degree", {"--class", "1/3,-2"}),
      wallach("phase", {"--psi", "3/7,-5/3"}),
      wallach("classify", {"--psi", "4,4"}),
      {"classify", "--theta", "2.5", "--n", "3"},
      wallach("charge", {"--psi=-1,-1"}),
      wallach("charge", {"--bundle", "4,4", "--target", "curve", "--root", "1,1"}),
      wallach("charge", {"--bundle", "4,4", "--target", "divisor", "--alpha", "1"}),
      wallach("cjy", {"--psi=-1,-1", "--target", "curve", "--root", "1,0"}),
      wallach("defect", {"--psi", "4,4", "--target", "divisor", "--alpha", "2"}),
      wallach("slope", {"--bundle", "1,2;3,-1"}),
      wallach("muhat", {"--bundle", "1,2;3,-1"}),
      wallach("stability", {"--bundle", "2,0;0,0"}),
      wallach("dominance", {"--bundle", "1,1", "--other", "0,0"}),
      wallach("hym", {"--bundle", "1,0;0,1"}),
      {"hr-matrix", "--type", "A2", "--omega", "2,1"},
      {"tau", "--type", "A2", "--omega", "2,1"},
      wallach("solve-slope", {"--m0", "24"}),
      {"pic0", "--type", "A2", "--omega", "2,1"},
      wallach("density", {"--n", "120"}),
      {"nef-solve", "--type", "A2", "--omega", "2,1", "--m0", "32"},
      wallach("k0"),
      {"tau", "--type", "B3", "--parabolic", "2", "--omega", "1,3"},
  };
  for (const auto& args : cases) expect_round_trip(invoke_json(args));
}

TEST(Cli, ThetaRecomputedFromExactEigenvalues) {
  const auto doc = invoke_json({"phase", "--type", "B3", "--parabolic", "1", "--omega", "2,3/2", "--psi", "-7/3,5"});
  double theta = 0.0;
  for (const auto& q : doc["exact"]["eigenvalues"]) theta += std::atan(to_double(parse_rational(q.get<std::string>())));
  EXPECT_NEAR(theta, doc["float"]["theta_hat"].get<double>(), 1e-12);
}

TEST(Cli, GoldenNumbers) {
  EXPECT_EQ(invoke_json(wallach("volume"))["exact"]["volume"], "8");
  EXPECT_EQ(invoke_json(wallach("flag-info"))["exact"]["delta_P"], nlohmann::json::array({"2", "2"}));
  EXPECT_EQ(invoke_json(wallach("cjy", {"--psi=-1,-1", "--target", "curve", "--root", "1,0"}))["verdicts"]["sign"], -1);
  const auto charge = invoke_json(wallach("charge", {"--bundle", "4,4", "--target", "divisor", "--alpha", "1"}));
  EXPECT_EQ(charge["exact"]["Z"]["re"], "-18");
  EXPECT_EQ(charge["exact"]["Z"]["im"], "24");
  EXPECT_EQ(invoke_json({"hr-matrix", "--type", "A2", "--omega", "2,1"})["exact"]["entries"],
            nlohmann::json::parse(R"([["1","3"],["3","2"]])"));
  EXPECT_EQ(invoke_json(wallach("tau"))["exact"]["tau"], "12");
  EXPECT_EQ(invoke_json({"pic0", "--type", "A2", "--omega", "2,1"})["exact"]["generators"],
            nlohmann::json::parse(R"([["-8","5"]])"));
  EXPECT_EQ(invoke_json(wallach("k0"))["exact"]["decomposition"], "K0 = SK0 ⊕ <O_1(-1)⊗O_2(1)> ⊕ 12Z");
  EXPECT_EQ(invoke_json(wallach("solve-slope", {"--m0", "5"}))["verdicts"]["solvable"], false);
  const auto st = invoke_json(wallach("stability", {"--bundle", "2,0;0,0"}));
  EXPECT_EQ(st["verdicts"]["verdict"], "unstable");
  EXPECT_EQ(st["exact"]["witness_slope"], "24");
  const auto hym = invoke_json(wallach("hym", {"--bundle", "1,0;0,1"}));
  EXPECT_EQ(hym["exact"]["constant_over_pi"], "3/2");
  EXPECT_EQ(hym["exact"]["lambda"], "3/4");
}

TEST(Cli, FlagSpecRoundTrip) {
  for (const auto& text : {"A2||2,2", "B3|2|1,3/2", "E8|1,3,5|1,1,2,1,1", "G2|1|7/9"}) {
    const auto spec = FlagSpec::parse_formatted(text);
    EXPECT_EQ(FlagSpec::parse_formatted(spec.format()).format(), spec.format());
  }
  const auto spec = FlagSpec::parse("D4", " 1, 3 ", "1/2, 4");
  EXPECT_EQ(spec.parabolic, (std::vector<int>{1, 3}));
  EXPECT_EQ(spec.format(), "D4|1,3|1/2,4");
  EXPECT_EQ(parse_bundle("1,2;3,4").size(), 2u);
  EXPECT_EQ(format_bundle(parse_bundle("1, 2 ; -3/6,4")), "1,2;-1/2,4");
  EXPECT_THROW(parse_bundle(""), ParseError);
  EXPECT_THROW(parse_bundle("1,2;"), ParseError);
  EXPECT_THROW(parse_index_list("1,,2"), ParseError);
  EXPECT_THROW(parse_index_list("-1"), ParseError);
  EXPECT_THROW(parse_integer("12a"), ParseError);
  EXPECT_THROW(FlagSpec::parse_formatted("A2|1"), ParseError);
}
