#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "triptych/pav.hpp"
#include "triptych/reliability.hpp"

using namespace triptych;

TEST_CASE("reliability curve of a small record") {
  const auto r = ForecastRecord::make(std::vector<double>{0.1, 0.4, 0.6, 0.8}, std::vector<int>{0, 1, 0, 1});
  const auto d = reliability_curve(r);
  REQUIRE(d.points.size() == 4);
  CHECK(d.points[0].cep == 0.0);
  CHECK(d.points[1].cep == 0.5);
  CHECK(d.points[2].cep == 0.5);
  CHECK(d.points[3].cep == 1.0);
  REQUIRE(d.bins.size() == 3);
  CHECK(d.bins[1].lo == 0.4);
  CHECK(d.bins[1].hi == 0.6);
  CHECK(d.bins[1].count == 2);
  CHECK(d.bins[1].events == 1);
}

TEST_CASE("histogram closes the last bin on the right") {
  const std::vector<double> x{0.0, 0.05, 0.1, 0.95, 1.0};
  const auto h = forecast_histogram(x, 10);
  REQUIRE(h.counts.size() == 10);
  REQUIRE(h.edges.size() == 11);
  CHECK(h.counts[0] == 2);
  CHECK(h.counts[1] == 1);
  CHECK(h.counts[9] == 2);
}

TEST_CASE("band of a single forecast") {
  const std::vector<double> half{0.5};
  const auto b = consistency_band(half, 0.9, 200, 1);
  REQUIRE(b.forecasts.size() == 1);
  CHECK(b.lower[0] == 0.0);
  CHECK(b.upper[0] == 1.0);

  const std::vector<double> zero{0.0};
  const auto z = consistency_band(zero, 0.9, 200, 1);
  CHECK(z.lower[0] == 0.0);
  CHECK(z.upper[0] == 0.0);
}

TEST_CASE("band of a constant forecast follows the binomial distribution") {
  const std::vector<double> x(1000, 0.5);
  const auto b = consistency_band(x, 0.9, 1000, 5);
  REQUIRE(b.forecasts.size() == 1);
  CHECK(std::abs(b.lower[0] - oracle::binomial_mean_quantile(1000, 0.5, 0.05)) <= 0.005);
  CHECK(std::abs(b.upper[0] - oracle::binomial_mean_quantile(1000, 0.5, 0.95)) <= 0.005);
}

TEST_CASE("band does not depend on the thread count") {
  oracle::Generator gen(51);
  const auto r = gen.record(400, oracle::OutcomeMode::bernoulli, 0);
  const auto one = consistency_band(r.forecasts, 0.9, 300, 17, 1);
  const auto four = consistency_band(r.forecasts, 0.9, 300, 17, 4);
  CHECK(one.forecasts == four.forecasts);
  CHECK(one.lower == four.lower);
  CHECK(one.upper == four.upper);
  const auto again = consistency_band(r.forecasts, 0.9, 300, 17, 3);
  CHECK(one.lower == again.lower);
  const auto other = consistency_band(r.forecasts, 0.9, 300, 18, 1);
  CHECK(one.lower != other.lower);
}

TEST_CASE("type-1 quantile") {
  const std::vector<double> v{1, 2, 3, 4};
  CHECK(type1_quantile(v, 0.25) == 1.0);
  CHECK(type1_quantile(v, 0.26) == 2.0);
  CHECK(type1_quantile(v, 0.0) == 1.0);
  CHECK(type1_quantile(v, 1.0) == 4.0);
}

TEST_CASE("property: reliability points are nondecreasing and bands bracket sensibly") {
  oracle::Generator gen(52);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = gen.any_record(1, 60);
    const auto d = reliability_curve(r);
    for (std::size_t k = 1; k < d.points.size(); ++k) {
      CHECK(d.points[k - 1].forecast < d.points[k].forecast);
      CHECK(d.points[k - 1].cep <= d.points[k].cep);
    }
    std::size_t total = 0;
    for (auto c : d.histogram.counts) total += c;
    CHECK(total == r.size());
    const auto b = consistency_band(r.forecasts, 0.9, 50, 3);
    CHECK(b.forecasts.size() == d.points.size());
    for (std::size_t k = 0; k < b.forecasts.size(); ++k) {
      CHECK(b.lower[k] <= b.upper[k]);
      CHECK(b.lower[k] >= 0.0);
      CHECK(b.upper[k] <= 1.0);
    }
  }
}

TEST_CASE("property: a recalibrated record lies on the diagonal") {
  oracle::Generator gen(53);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = recalibrate(gen.any_record(1, 60));
    for (const auto& p : reliability_curve(r).points) CHECK(p.cep == doctest::Approx(p.forecast).epsilon(1e-12));
  }
}
