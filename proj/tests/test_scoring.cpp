#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "triptych/error.hpp"
#include "triptych/scoring.hpp"

using namespace triptych;

TEST_CASE("brier and log examples") {
  CHECK(score(ScoringRule::brier(), 0.7, 1).value() == doctest::Approx(0.09).epsilon(1e-15));
  CHECK(score(ScoringRule::log(), 0.5, 1).value() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(score(ScoringRule::log(), 0.0, 1).is_infinite());
  CHECK(score(ScoringRule::log(), 1.0, 0).is_infinite());
  CHECK(score(ScoringRule::log(), 1.0, 1).value() == 0.0);
}

TEST_CASE("elementary score examples including the tie term") {
  CHECK(elementary_score(0.5, 0.7, 0) == 1.0);
  CHECK(elementary_score(0.3, 0.3, 1) == doctest::Approx(0.42).epsilon(1e-15));
  CHECK(elementary_score(0.25, 0.1, 1) == 1.5);
  CHECK(elementary_score(0.25, 0.9, 1) == 0.0);
  CHECK(score(ScoringRule::zero_one(), 0.5, 1).value() == 0.5);
  CHECK(score(ScoringRule::zero_one(), 0.8, 0).value() == 1.0);
}

TEST_CASE("mean scores") {
  const auto r = ForecastRecord::make(std::vector<double>{0.5, 0.5}, std::vector<int>{0, 1});
  CHECK(mean_score(ScoringRule::brier(), r).value() == 0.25);
  CHECK(mean_score(ScoringRule::zero_one(), r).value() == 0.5);
  const auto s = ForecastRecord::make(std::vector<double>{0.0, 0.5}, std::vector<int>{1, 1});
  CHECK(mean_score(ScoringRule::log(), s).is_infinite());
}

TEST_CASE("property: scores agree with direct formulas") {
  oracle::Generator gen(31);
  for (int k = 0; k < 2000; ++k) {
    const double x = gen.forecast(2);
    const int y = gen.coin(0.5);
    const double theta = gen.uniform();
    CHECK(score(ScoringRule::brier(), x, y).value() == oracle::brier(x, y));
    CHECK(score(ScoringRule::zero_one(), x, y).value() == oracle::misclass(x, y));
    CHECK(score(ScoringRule::elementary(theta), x, y).value() == oracle::elementary(theta, x, y));
    if (x > 0.0 && x < 1.0) CHECK(score(ScoringRule::elementary(x), x, y).value() == oracle::elementary(x, x, y));
    const double l = oracle::logscore(x, y);
    if (std::isinf(l)) {
      CHECK(score(ScoringRule::log(), x, y).is_infinite());
    } else {
      CHECK(score(ScoringRule::log(), x, y).value() == doctest::Approx(l).epsilon(1e-14));
    }
  }
}

TEST_CASE("savage representation examples") {
  CHECK(savage_score(ScoringRule::log(), 0.25, 0).value() == doctest::Approx(-std::log(0.75)).epsilon(1e-14));
  CHECK(savage_score(ScoringRule::elementary(0.5), 0.7, 0).value() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(savage_score(ScoringRule::log(), 0.0, 1).is_infinite());
  CHECK_THROWS_AS(savage_score(ScoringRule::beta(2.0, 3.0), 0.3, 1), std::invalid_argument);
}

TEST_CASE("property: savage form reproduces every score on a grid") {
  const std::vector<ScoringRule> rules{ScoringRule::brier(), ScoringRule::log(), ScoringRule::zero_one(),
                                       ScoringRule::elementary(0.3), ScoringRule::elementary(0.85)};
  for (const auto& rule : rules) {
    for (int k = 0; k <= 100; ++k) {
      const double x = k / 100.0;
      for (int y = 0; y <= 1; ++y) {
        const ExtendedReal direct = score(rule, x, y);
        const ExtendedReal savage = savage_score(rule, x, y);
        REQUIRE(direct.is_infinite() == savage.is_infinite());
        if (direct.is_finite()) CHECK(std::abs(direct.value() - savage.value()) <= 1e-12);
      }
    }
  }
}

TEST_CASE("mixture representation reproduces the closed forms") {
  CHECK(std::abs(mixture_score(ScoringRule::brier(), 0.7, 1, 10000) - 0.09) <= 1e-6);
  CHECK(std::abs(mixture_score(ScoringRule::log(), 0.5, 1) - std::log(2.0)) <= 1e-6);
  CHECK(std::abs(mixture_score(ScoringRule::beta(1.0, 1.0), 0.3, 0) - 0.09) <= 1e-6);
  CHECK_THROWS_AS(mixture_score(ScoringRule::log(), 0.0, 1), DegenerateError);
  CHECK_THROWS_AS(mixture_score(ScoringRule::zero_one(), 0.5, 1), std::invalid_argument);
}

TEST_CASE("property: mixture integral matches Brier and Log on a grid") {
  for (int k = 1; k < 20; ++k) {
    const double x = k / 20.0;
    for (int y = 0; y <= 1; ++y) {
      CHECK(std::abs(mixture_score(ScoringRule::brier(), x, y) - oracle::brier(x, y)) <= 1e-6);
      CHECK(std::abs(mixture_score(ScoringRule::log(), x, y) - oracle::logscore(x, y)) <= 1e-6);
    }
  }
}

TEST_CASE("property: propriety of every rule on a grid") {
  const std::vector<ScoringRule> rules{ScoringRule::brier(), ScoringRule::log(), ScoringRule::zero_one(),
                                       ScoringRule::elementary(0.35), ScoringRule::beta(2.0, 0.5)};
  for (const auto& rule : rules) {
    for (int pk = 0; pk <= 20; ++pk) {
      const double p = pk / 20.0;
      auto expected = [&](double x) {
        const ExtendedReal s1 = score(rule, x, 1);
        const ExtendedReal s0 = score(rule, x, 0);
        double e = 0.0;
        if (p > 0.0) e += p * s1.value();
        if (p < 1.0) e += (1.0 - p) * s0.value();
        return e;
      };
      const double truth = expected(p);
      for (int xk = 0; xk <= 20; ++xk) CHECK(truth <= expected(xk / 20.0) + 1e-12);
    }
  }
}

TEST_CASE("zero-one equals the elementary score at one half") {
  for (int k = 0; k <= 40; ++k) {
    const double x = k / 40.0;
    for (int y = 0; y <= 1; ++y) {
      CHECK(score(ScoringRule::zero_one(), x, y).value() == score(ScoringRule::elementary(0.5), x, y).value());
    }
  }
}

TEST_CASE("rule parsing and names") {
  CHECK(ScoringRule::parse("brier") == ScoringRule::brier());
  CHECK(ScoringRule::parse("log") == ScoringRule::log());
  CHECK(ScoringRule::parse("misclass") == ScoringRule::zero_one());
  CHECK(ScoringRule::parse("elementary:0.25").theta() == 0.25);
  const auto b = ScoringRule::parse("beta:2:3");
  CHECK(b.alpha() == 2.0);
  CHECK(b.beta_param() == 3.0);
  CHECK(ScoringRule::parse(b.name()) == b);
  CHECK(ScoringRule::parse(ScoringRule::elementary(0.1).name()) == ScoringRule::elementary(0.1));
  CHECK_THROWS_AS(ScoringRule::parse("crps"), std::invalid_argument);
  CHECK_THROWS_AS(ScoringRule::parse("elementary:1.5"), std::invalid_argument);
  CHECK_THROWS_AS(ScoringRule::parse("beta:0:1"), std::invalid_argument);
}

TEST_CASE("extended real arithmetic") {
  const ExtendedReal inf = ExtendedReal::infinity();
  CHECK((inf + 1.0).is_infinite());
  CHECK((ExtendedReal(2.0) + 1.0).value() == 3.0);
  CHECK((inf - 1.0).is_infinite());
  CHECK_THROWS_AS(ExtendedReal(1.0) - inf, DegenerateError);
  CHECK((inf / 4.0).is_infinite());
  CHECK(ExtendedReal(1.0) < inf);
  CHECK_FALSE(inf < inf);
  CHECK(inf.to_string() == "inf");
  CHECK(ExtendedReal::parse("inf") == inf);
  CHECK(ExtendedReal::parse("0.1").value() == 0.1);
  CHECK(ExtendedReal(0.1).to_string() == "0.1");
  CHECK_THROWS_AS(inf.finite_value(), DegenerateError);
}
