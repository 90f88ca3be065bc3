#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "triptych/murphy.hpp"
#include "triptych/pav.hpp"

using namespace triptych;

namespace {

bool is_knot(const MurphyCurve& c, double t) { return std::find(c.knots.begin(), c.knots.end(), t) != c.knots.end(); }

}  // namespace

TEST_CASE("single forecast at one half") {
  const auto c = murphy_curve(ForecastRecord::make(std::vector<double>{0.5}, std::vector<int>{1}));
  CHECK(c.knots == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(murphy_value(c, 0.5) == 0.5);
  CHECK(murphy_value(c, 0.25) == 0.0);
  CHECK(murphy_value(c, 0.75) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(murphy_area(c) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(c.marked_knots() == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(murphy_value(c, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(murphy_value(c, 1.0), std::invalid_argument);
}

TEST_CASE("segments count false alarms and misses") {
  const auto c = murphy_curve(ForecastRecord::make(std::vector<double>{0.2, 0.6, 0.6}, std::vector<int>{1, 0, 1}));
  REQUIRE(c.segments.size() == 3);
  CHECK(c.segments[0].false_alarms == 1);
  CHECK(c.segments[0].misses == 0);
  CHECK(c.segments[1].false_alarms == 1);
  CHECK(c.segments[1].misses == 1);
  CHECK(c.segments[2].false_alarms == 0);
  CHECK(c.segments[2].misses == 2);
}

TEST_CASE("property: curve matches the direct mean elementary score") {
  oracle::Generator gen(41);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = gen.any_record(1, 60);
    const auto c = murphy_curve(r);
    for (int k = 1; k < 200; ++k) {
      const double t = k / 200.0;
      CHECK(std::abs(murphy_value(c, t) - oracle::murphy_grid(r, t)) <= 1e-12);
    }
    for (double t : r.forecasts) {
      if (t > 0.0 && t < 1.0) CHECK(std::abs(murphy_value(c, t) - oracle::murphy_grid(r, t)) <= 1e-12);
    }
    for (double t = 0.0013; t < 1.0; t += 0.0371) {
      if (!is_knot(c, t)) CHECK(std::abs(murphy_value(c, t) - oracle::murphy_grid(r, t)) <= 1e-12);
    }
  }
}

TEST_CASE("property: area equals the mean Brier score and one half gives misclassification") {
  oracle::Generator gen(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = gen.any_record(1, 100);
    const auto c = murphy_curve(r);
    double brier = 0.0;
    double mr = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      brier += oracle::brier(r.forecasts[i], r.outcomes[i]);
      mr += oracle::misclass(r.forecasts[i], r.outcomes[i]);
    }
    const double n = static_cast<double>(r.size());
    CHECK(std::abs(murphy_area(c) - brier / n) <= 1e-12);
    CHECK(murphy_value(c, 0.5) == doctest::Approx(mr / n).epsilon(1e-15));
    CHECK(murphy_value(c, 0.5) == mean_score(ScoringRule::zero_one(), r).value());
  }
}

TEST_CASE("property: weighted area equals the mean score") {
  oracle::Generator gen(43);
  const std::vector<ScoringRule> rules{ScoringRule::brier(),          ScoringRule::log(),
                                       ScoringRule::beta(2.0, 0.5),   ScoringRule::beta(0.7, 3.0),
                                       ScoringRule::zero_one(),       ScoringRule::elementary(0.3)};
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = gen.any_record(1, 60);
    const auto c = murphy_curve(r);
    for (const auto& rule : rules) {
      const ExtendedReal area = weighted_murphy_area(c, rule);
      const ExtendedReal direct = mean_score(rule, r);
      REQUIRE(area.is_infinite() == direct.is_infinite());
      if (direct.is_finite()) CHECK(std::abs(area.value() - direct.value()) <= 1e-10);
    }
  }
}

TEST_CASE("log area diverges exactly when a certain forecast fails") {
  const auto r = ForecastRecord::make(std::vector<double>{0.0, 0.5}, std::vector<int>{1, 0});
  CHECK(weighted_murphy_area(murphy_curve(r), ScoringRule::log()).is_infinite());
  const auto s = ForecastRecord::make(std::vector<double>{0.0, 1.0}, std::vector<int>{0, 1});
  CHECK(weighted_murphy_area(murphy_curve(s), ScoringRule::log()).value() == 0.0);
}

TEST_CASE("property: recalibration never raises the curve") {
  oracle::Generator gen(44);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = gen.any_record(1, 80);
    const auto c = murphy_curve(r);
    const auto rc = murphy_curve(recalibrate(r));
    for (int k = 1; k < 100; ++k) {
      const double t = k / 100.0;
      CHECK(murphy_value(rc, t) <= murphy_value(c, t) + 1e-12);
    }
    for (double t : r.forecasts) {
      if (t > 0.0 && t < 1.0) CHECK(murphy_value(rc, t) <= murphy_value(c, t) + 1e-12);
    }
  }
}

TEST_CASE("property: curve bounds and endpoint limits") {
  oracle::Generator gen(45);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = gen.any_record(1, 80);
    const auto c = murphy_curve(r);
    double events = 0.0;
    for (int y : r.outcomes) events += y;
    const double rbar = events / static_cast<double>(r.size());
    for (int k = 1; k < 100; ++k) {
      const double t = k / 100.0;
      const double v = murphy_value(c, t);
      CHECK(v >= 0.0);
      CHECK(v <= 2.0 * std::max(t, 1.0 - t) + 1e-15);
      CHECK(v <= 2.0 * (t * (1.0 - rbar) + (1.0 - t) * rbar) + 1e-12);
    }
    REQUIRE(c.knots.front() == 0.0);
    REQUIRE(c.knots.back() == 1.0);
    CHECK(c.knot_values.size() == c.knots.size());
    CHECK(c.segments.size() + 1 == c.knots.size());
  }
}
