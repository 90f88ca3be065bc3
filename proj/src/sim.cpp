#include "triptych/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

#include "triptych/error.hpp"
#include "triptych/random.hpp"

namespace triptych {

Scenario parse_scenario(std::string_view text) {
  if (text == "A" || text == "a") return Scenario::A;
  if (text == "B" || text == "b") return Scenario::B;
  if (text == "C" || text == "c") return Scenario::C;
  throw std::invalid_argument("unknown scenario: " + std::string(text));
}

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::A: return "A";
    case Scenario::B: return "B";
    case Scenario::C: return "C";
  }
  return "A";
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

ForecastRecord ScenarioSample::record(std::string_view column) const {
  for (const auto& c : columns) {
    if (c.name == column) return ForecastRecord::make(c.values, outcomes, c.name);
  }
  throw DataError("scenario " + std::string(to_string(scenario)) + " has no column " + std::string(column));
}

Dataset ScenarioSample::dataset() const {
  std::vector<ForecastColumn> cols;
  for (const auto& c : columns) {
    ForecastColumn fc{c.name, {}};
    fc.values.assign(c.values.begin(), c.values.end());
    cols.push_back(std::move(fc));
  }
  return Dataset(outcomes, std::move(cols));
}

ScenarioSample sample_scenario(Scenario scenario, std::size_t n, std::uint64_t seed, unsigned threads) {
  if (n < 1) throw std::invalid_argument("sample size must be at least 1");
  ScenarioSample s;
  s.scenario = scenario;
  s.n = n;
  s.seed = seed;
  s.x0.resize(n);
  s.outcomes.resize(n);
  switch (scenario) {
    case Scenario::A: s.columns = {{"X0", {}}, {"X1", {}}}; break;
    case Scenario::B: s.columns = {{"X1", {}}, {"X2", {}}}; break;
    case Scenario::C: s.columns = {{"X0", {}}, {"X1", {}}, {"X2", {}}, {"X3", {}}}; break;
  }
  for (auto& c : s.columns) c.values.resize(n);

  auto run = [&](std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) {
      CounterRng rng(seed, i);
      double x0 = 0.0;
      switch (scenario) {
        case Scenario::A:
          x0 = rng.uniform();
          s.columns[0].values[i] = x0;
          s.columns[1].values[i] = 3.0 / 8.0 + x0 / 4.0;
          break;
        case Scenario::B:
          x0 = rng.uniform();
          s.columns[0].values[i] = (x0 < 0.25 || x0 > 0.75) ? x0 : 0.5;
          s.columns[1].values[i] = x0 < 0.25 ? 1.0 / 8.0 : (x0 > 0.75 ? 7.0 / 8.0 : x0);
          break;
        case Scenario::C: {
          double a[4];
          for (double& v : a) v = rng.normal();
          double partial = a[0] + a[1] + a[2] + a[3];
          for (int j = 0; j < 4; ++j) {
            s.columns[static_cast<std::size_t>(j)].values[i] = normal_cdf(partial / std::sqrt(j + 1.0));
            partial -= a[3 - j];
          }
          x0 = s.columns[0].values[i];
          break;
        }
      }
      s.x0[i] = x0;
      s.outcomes[i] = rng.bernoulli(x0);
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::size_t>(n, 64))));
  if (workers == 1) {
    run(0, n);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t first = w * chunk;
      const std::size_t last = std::min(n, first + chunk);
      if (first < last) pool.emplace_back(run, first, last);
    }
    for (auto& t : pool) t.join();
  }
  return s;
}

}  // namespace triptych
