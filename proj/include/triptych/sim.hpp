#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "triptych/data.hpp"

namespace triptych {

enum class Scenario { A, B, C };

Scenario parse_scenario(std::string_view text);
std::string_view to_string(Scenario s);

struct NamedSeries {
  std::string name;
  std::vector<double> values;
};

// Draws from the idealized prediction spaces. Row i uses the random stream
// (seed, i), so any subset of rows can be generated independently.
//   A: X0 ~ U(0,1); columns X0 and X1 = 3/8 + X0/4.
//   B: X0 ~ U(0,1); X1 keeps X0 outside [1/4, 3/4] and is 1/2 inside;
//      X2 is 1/8 below 1/4, X0 inside [1/4, 3/4] and 7/8 above 3/4.
//   C: a1..a4 iid N(0,1); Xj = Φ((j+1)^(-1/2) (a1 + ... + a_{4-j})), j = 0..3.
// Outcomes are Bernoulli(X0) in every scenario.
struct ScenarioSample {
  Scenario scenario = Scenario::A;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<double> x0;
  std::vector<int> outcomes;
  std::vector<NamedSeries> columns;

  ForecastRecord record(std::string_view column) const;
  Dataset dataset() const;
};

ScenarioSample sample_scenario(Scenario scenario, std::size_t n, std::uint64_t seed,
                               unsigned threads = 1);

// Standard normal CDF.
double normal_cdf(double z);

}  // namespace triptych
