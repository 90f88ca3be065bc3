#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "triptych/error.hpp"
#include "triptych/roc.hpp"

using namespace triptych;

namespace {

// Integer vertex coordinates (false alarms, hits) make the hull exact.
std::vector<oracle::Point> counts(const RocCurve& c, double n0, double n1) {
  std::vector<oracle::Point> out;
  for (const auto& v : c.vertices) out.emplace_back(std::round(v.far * n0), std::round(v.hr * n1));
  return out;
}

double n_events(const ForecastRecord& r) {
  double s = 0.0;
  for (int y : r.outcomes) s += y;
  return s;
}

}  // namespace

TEST_CASE("raw ROC curve of a small record") {
  const auto r = ForecastRecord::make(std::vector<double>{0.1, 0.4, 0.6, 0.8}, std::vector<int>{0, 1, 0, 1});
  const auto c = roc_curve(r);
  REQUIRE(c.vertices.size() == 5);
  CHECK(c.vertices[0].far == 0.0);
  CHECK(c.vertices[0].hr == 0.0);
  CHECK(c.vertices[1].hr == 0.5);
  CHECK(c.vertices[2].far == 0.5);
  CHECK(c.vertices[3].hr == 1.0);
  CHECK(c.vertices[4].far == 1.0);
  CHECK(c.thresholds.front() == 0.8);
  CHECK(std::isinf(c.thresholds.back()));
  CHECK(c.auc == doctest::Approx(0.75).epsilon(1e-15));
  CHECK_FALSE(c.concave);
}

TEST_CASE("ties enter as one sloped segment") {
  const auto r = ForecastRecord::make(std::vector<double>{0.5, 0.5}, std::vector<int>{0, 1});
  const auto c = roc_curve(r);
  REQUIRE(c.vertices.size() == 2);
  CHECK(c.auc == 0.5);
}

TEST_CASE("degenerate outcomes are rejected") {
  const auto r = ForecastRecord::make(std::vector<double>{0.2, 0.7}, std::vector<int>{1, 1});
  CHECK_THROWS_AS(roc_curve(r), DegenerateError);
  CHECK_THROWS_AS(concave_roc(r), DegenerateError);
}

TEST_CASE("property: area equals the pairwise concordance") {
  oracle::Generator gen(61);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = gen.two_class_record(2, 80);
    const auto c = roc_curve(r);
    CHECK(std::abs(c.auc - oracle::pairwise_auc(r)) <= 1e-12);
    CHECK(c.auc == auc(c));
    for (std::size_t k = 1; k < c.vertices.size(); ++k) {
      CHECK(c.vertices[k - 1].far <= c.vertices[k].far);
      CHECK(c.vertices[k - 1].hr <= c.vertices[k].hr);
    }
  }
}

TEST_CASE("property: concave curve is the upper hull of the raw curve") {
  oracle::Generator gen(62);
  for (int trial = 0; trial < 300; ++trial) {
    const auto r = gen.two_class_record(2, 80);
    const double n1 = n_events(r);
    const double n0 = static_cast<double>(r.size()) - n1;
    const auto raw = roc_curve(r);
    const auto cc = concave_roc(r);
    CHECK(cc.concave);
    CHECK(oracle::upper_hull(counts(raw, n0, n1)) == oracle::upper_hull(counts(cc, n0, n1)));
    CHECK(cc.auc >= raw.auc - 1e-12);
  }
}

TEST_CASE("property: strictly increasing transforms leave the curve unchanged") {
  oracle::Generator gen(63);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = gen.two_class_record(2, 60);
    ForecastRecord cube = r;
    ForecastRecord logistic = r;
    for (std::size_t i = 0; i < r.size(); ++i) {
      const double x = r.forecasts[i];
      cube.forecasts[i] = x * x * x;
      logistic.forecasts[i] = 1.0 / (1.0 + std::exp(-8.0 * (x - 0.5)));
    }
    const auto a = roc_curve(r);
    for (const auto* t : {&cube, &logistic}) {
      const auto b = roc_curve(*t);
      REQUIRE(a.vertices.size() == b.vertices.size());
      for (std::size_t k = 0; k < a.vertices.size(); ++k) {
        CHECK(a.vertices[k].far == b.vertices[k].far);
        CHECK(a.vertices[k].hr == b.vertices[k].hr);
      }
      CHECK(a.auc == b.auc);
    }
  }
}
