#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "triptych/data.hpp"

namespace triptych {

struct ReliabilityPoint {
  double forecast = 0.0;
  double cep = 0.0;  // recalibrated value x̂ at this forecast value
};

// A PAV block read as a bin: forecast values in [lo, hi], all mapped to
// `cep`, which is the event frequency of the bin.
struct ReliabilityBin {
  double lo = 0.0;
  double hi = 0.0;
  double cep = 0.0;
  std::size_t count = 0;
  std::size_t events = 0;
};

struct Histogram {
  std::vector<double> edges;  // bins + 1 equally spaced edges on [0,1]
  std::vector<std::size_t> counts;
};

// Pointwise resampling band at each distinct forecast value.
struct ConsistencyBand {
  double level = 0.9;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
  bool pointwise = true;
  std::vector<double> forecasts;
  std::vector<double> lower;
  std::vector<double> upper;
};

struct ReliabilityDiagram {
  std::vector<ReliabilityPoint> points;
  std::vector<ReliabilityBin> bins;
  Histogram histogram;
  std::optional<ConsistencyBand> band;
  std::string name;
};

// Equal-width counts on [0,1]; the last bin is closed on the right.
Histogram forecast_histogram(std::span<const double> forecasts, std::size_t bins = 10);

// CORP reliability diagram: one point per distinct forecast value.
ReliabilityDiagram reliability_curve(const ForecastRecord& record, std::size_t histogram_bins = 10);

// For each replicate b, draws y*_i ~ Bernoulli(x_i) from the stream (seed, b),
// refits PAV and records the fitted value at every distinct forecast value.
// Bounds are type-1 empirical quantiles at (1 - level)/2 and (1 + level)/2.
// The result does not depend on `threads`.
ConsistencyBand consistency_band(std::span<const double> forecasts, double level,
                                 std::size_t replicates, std::uint64_t seed,
                                 unsigned threads = 1);

// Order statistic with index ceil(p * size), 1-based; `sorted` must be
// ascending and nonempty.
double type1_quantile(std::span<const double> sorted, double p);

}  // namespace triptych
