#include <doctest.h>

#include "oracles.hpp"
#include "triptych/error.hpp"
#include "triptych/pav.hpp"
#include "triptych/scoring.hpp"

using namespace triptych;

namespace {

ForecastRecord rec(std::vector<double> x, std::vector<int> y) { return ForecastRecord::make(x, y); }

}  // namespace

TEST_CASE("already isotonic outcomes are reproduced") {
  const auto fit = pav_calibrate(rec({0.1, 0.3, 0.6, 0.9}, {0, 0, 1, 1}));
  CHECK(fit.recalibrated == std::vector<double>{0, 0, 1, 1});
  CHECK(fit.blocks.size() == 2);
}

TEST_CASE("a single violation is pooled") {
  // Partitions with nondecreasing means: {0}{1,0}{1} gives SSE 0.5, the minimum.
  const auto fit = pav_calibrate(rec({0.1, 0.4, 0.6, 0.8}, {0, 1, 0, 1}));
  CHECK(fit.recalibrated == std::vector<double>{0, 0.5, 0.5, 1});
}

TEST_CASE("tied forecasts share one block") {
  const auto fit = pav_calibrate(rec({0.5, 0.5}, {1, 0}));
  CHECK(fit.recalibrated == std::vector<double>{0.5, 0.5});
  CHECK(fit.blocks.size() == 1);
  const auto g = pav_calibrate(rec({0.2, 0.5, 0.5, 0.9}, {0, 1, 0, 1}));
  CHECK(g.recalibrated[1] == g.recalibrated[2]);
}

TEST_CASE("apply_recalibration restores the original order") {
  const auto r = rec({0.9, 0.1}, {0, 1});
  const auto out = recalibrate(r);
  CHECK(out.forecasts == std::vector<double>{0.5, 0.5});
  CHECK(out.outcomes == r.outcomes);

  const auto s = rec({0.7, 0.2, 0.4}, {1, 0, 1});
  CHECK(recalibrate(s).forecasts == std::vector<double>{1.0, 0.0, 1.0});
}

TEST_CASE("apply_recalibration identity on an isotonic record and rejects foreign fits") {
  const auto r = rec({0.0, 0.5, 1.0}, {0, 1, 1});
  const auto fit = pav_calibrate(r);
  CHECK(apply_recalibration(fit, r).forecasts == std::vector<double>{0.0, 1.0, 1.0});
  const auto iso = rec({0.0, 1.0}, {0, 1});
  CHECK(recalibrate(iso).forecasts == iso.forecasts);
  CHECK_THROWS_AS(apply_recalibration(fit, rec({0.1, 0.2}, {0, 1})), DataError);
  CHECK_THROWS_AS(apply_recalibration(fit, rec({0.0, 0.5, 1.0}, {1, 1, 1})), DataError);
}

TEST_CASE("property: fit invariants") {
  oracle::Generator gen(21);
  for (int trial = 0; trial < 500; ++trial) {
    const auto r = gen.any_record(1, 80);
    const auto fit = pav_calibrate(r);
    double sum_fit = 0.0;
    double sum_y = 0.0;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k > 0) {
        CHECK(fit.recalibrated[k - 1] <= fit.recalibrated[k]);
        CHECK(fit.sorted_forecasts[k - 1] <= fit.sorted_forecasts[k]);
        if (fit.sorted_forecasts[k - 1] == fit.sorted_forecasts[k]) {
          CHECK(fit.recalibrated[k - 1] == fit.recalibrated[k]);
        }
      }
      sum_fit += fit.recalibrated[k];
      sum_y += r.outcomes[k];
    }
    CHECK(sum_fit == doctest::Approx(sum_y).epsilon(1e-12));
    for (std::size_t b = 0; b < fit.blocks.size(); ++b) {
      const auto& blk = fit.blocks[b];
      double events = 0.0;
      for (std::size_t k = blk.begin; k < blk.end; ++k) events += fit.sorted_outcomes[k];
      CHECK(blk.value == events / static_cast<double>(blk.end - blk.begin));
      if (b > 0) CHECK(fit.blocks[b - 1].value < blk.value);
    }
    // Recalibrating a recalibrated record changes nothing.
    const auto once = recalibrate(r);
    CHECK(recalibrate(once).forecasts == once.forecasts);
  }
}

TEST_CASE("property: PAV equals the brute-force minimizer for n <= 12") {
  oracle::Generator gen(22);
  for (int trial = 0; trial < 400; ++trial) {
    const auto r = gen.any_record(1, 12);
    CHECK(pav_calibrate(r).recalibrated == oracle::brute_force_isotonic(r));
  }
}

TEST_CASE("property: PAV is optimal for every implemented score among isotonic fits, n <= 8") {
  oracle::Generator gen(23);
  const std::vector<ScoringRule> rules{ScoringRule::brier(), ScoringRule::log(), ScoringRule::zero_one(),
                                       ScoringRule::elementary(0.2), ScoringRule::elementary(0.7)};
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = gen.any_record(1, 8);
    const auto fit = pav_calibrate(r);
    const auto groups = oracle::tie_groups(r);
    auto candidates = oracle::isotonic_candidates(groups);
    // Also perturbed isotonic vectors that are not block means.
    for (int k = 0; k < 20; ++k) {
      std::vector<double> v(groups.x.size());
      for (double& e : v) e = gen.uniform();
      std::sort(v.begin(), v.end());
      candidates.push_back(v);
    }
    auto expand = [&](const std::vector<double>& per_group) {
      ForecastRecord out;
      for (std::size_t g = 0; g < per_group.size(); ++g) {
        for (int j = 0; j < static_cast<int>(groups.count[g]); ++j) out.forecasts.push_back(per_group[g]);
      }
      out.outcomes = fit.sorted_outcomes;
      return out;
    };
    ForecastRecord pav;
    pav.forecasts = fit.recalibrated;
    pav.outcomes = fit.sorted_outcomes;
    for (const auto& rule : rules) {
      const ExtendedReal best = mean_score(rule, pav);
      REQUIRE(best.is_finite());
      for (const auto& c : candidates) {
        const ExtendedReal other = mean_score(rule, expand(c));
        if (other.is_infinite()) continue;
        CHECK(best.value() <= other.value() + 1e-12);
      }
    }
  }
}
