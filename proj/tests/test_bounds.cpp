#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "bhh/bounds.hpp"
#include "bhh/quadrature.hpp"

#include "support/stats.hpp"

using namespace bhh;
using testsupport::Rational;

TEST_CASE("rational identities behind the lower bound") {
  // (1/3) * (7/324) * (57/112) = 19/5184
  constexpr Rational correction =
      Rational(1, 3) * Rational(7, 324) * Rational(57, 112);
  static_assert(correction == Rational(19, 5184));
  CHECK(correction == Rational(19, 5184));
  // 5/8 + 19/5184 = 3259/5184
  constexpr Rational lower = Rational(5, 8) + Rational(19, 5184);
  static_assert(lower == Rational(3259, 5184));
  CHECK(lower.value() == doctest::Approx(0.6286651234567902).epsilon(1e-15));
  // 7/972 is (1/3) * (7/324)
  CHECK(Rational(1, 3) * Rational(7, 324) == Rational(7, 972));
}

TEST_CASE("compose_rigorous assembles the quadrature side") {
  const auto report = compose_rigorous();
  CHECK(report.lower_base == 0.625);
  CHECK(std::fabs(report.lower_correction - 19.0 / 5184.0) < 1e-8);
  CHECK(report.lower_rigorous ==
        doctest::Approx(0.628665123).epsilon(1e-8));
  // epsilon0 = (3/16) P(B), computed from the closed form
  CHECK(report.epsilon0_rigorous == 0.25 * 0.75 * event_b_probability());
  CHECK(report.epsilon0_rigorous ==
        doctest::Approx(6.509483369e-7).epsilon(1e-8));
  CHECK(report.epsilon0_rigorous >= 9.0 / 16.0 * 1e-6);
  CHECK(report.upper_rigorous == report.beta_bhh - report.epsilon0_rigorous);
  CHECK(std::fabs(report.beta_bhh - 0.92116) < 1e-4);
  CHECK_FALSE(report.upper_empirical_zigzag.has_value());
  CHECK_FALSE(report.upper_empirical_permute6.has_value());
  CHECK(report.provenance.count("beta_bhh") == 1);
  CHECK(report.provenance.count("lower_correction") == 1);

  std::string diagnostic;
  CHECK(check_report(report, &diagnostic));
  CHECK(diagnostic.empty());
}

TEST_CASE("zero-gain estimates leave the empirical uppers at beta") {
  Estimate zero4, zero6;
  zero4.batches = zero6.batches = 10;
  zero4.samples_per_batch = zero6.samples_per_batch = 1;
  const auto report = compose_empirical_from(zero4, zero6);
  REQUIRE(report.upper_empirical_zigzag.has_value());
  REQUIRE(report.upper_empirical_permute6.has_value());
  CHECK(*report.upper_empirical_zigzag == report.beta_bhh);
  CHECK(*report.upper_empirical_permute6 == report.beta_bhh);
}

TEST_CASE("empirical report at reduced budget keeps the bound ordering") {
  EmpiricalBudgets budgets;
  budgets.zigzag_batches = 4;
  budgets.zigzag_samples = 20000;
  budgets.permute_batches = 4;
  budgets.permute_samples = 5000;
  const auto report = compose_empirical(7, budgets);
  REQUIRE(report.upper_empirical_zigzag.has_value());
  REQUIRE(report.upper_empirical_permute6.has_value());
  CHECK(report.lower_rigorous < *report.upper_empirical_permute6);
  CHECK(*report.upper_empirical_permute6 < *report.upper_empirical_zigzag);
  CHECK(*report.upper_empirical_zigzag < report.upper_rigorous);
  CHECK(*report.upper_empirical_zigzag ==
        doctest::Approx(0.90632).epsilon(0.01));
  CHECK(*report.upper_empirical_permute6 ==
        doctest::Approx(0.8902).epsilon(0.01));
  std::string diagnostic;
  CHECK(check_report(report, &diagnostic));

  const auto prov = report.provenance.at("upper_empirical_zigzag");
  CHECK(prov.source == "estimators");
  CHECK(prov.seed.has_value());
  CHECK(*prov.seed == 7);
}

TEST_CASE("check_report flags violations") {
  auto report = compose_rigorous();
  report.lower_correction += 1e-6;
  std::string diagnostic;
  CHECK_FALSE(check_report(report, &diagnostic));
  CHECK(!diagnostic.empty());
}

TEST_CASE("json serialization is canonical and complete") {
  const auto report = compose_rigorous();
  const std::string a = to_json(report);
  const std::string b = to_json(report);
  CHECK(a == b);

  const auto parsed = nlohmann::json::parse(a);
  for (const char* key :
       {"beta_bhh", "epsilon0_rigorous", "upper_rigorous",
        "upper_empirical_zigzag", "upper_empirical_permute6", "lower_base",
        "lower_correction", "lower_rigorous", "provenance"}) {
    CHECK(parsed.contains(key));
  }
  CHECK(parsed["upper_empirical_zigzag"].is_null());
  CHECK(parsed["beta_bhh"].get<double>() == report.beta_bhh);
  CHECK(parsed["provenance"]["beta_bhh"]["source"] == "quadrature");

  // csv and table renderings stay in sync with the field list
  const std::string csv = to_csv(report);
  CHECK(csv.find("lower_rigorous") != std::string::npos);
  const std::string table = to_table(report);
  CHECK(table.find("(not computed)") != std::string::npos);
}
