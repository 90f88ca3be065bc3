#include "triptych/reliability.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "triptych/error.hpp"
#include "triptych/pav.hpp"
#include "triptych/random.hpp"

namespace triptych {

Histogram forecast_histogram(std::span<const double> forecasts, std::size_t bins) {
  if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
  Histogram h;
  h.edges.resize(bins + 1);
  for (std::size_t k = 0; k <= bins; ++k) h.edges[k] = static_cast<double>(k) / static_cast<double>(bins);
  h.counts.assign(bins, 0);
  for (double x : forecasts) {
    auto k = static_cast<std::size_t>(x * static_cast<double>(bins));
    h.counts[std::min(k, bins - 1)]++;
  }
  return h;
}

ReliabilityDiagram reliability_curve(const ForecastRecord& record, std::size_t histogram_bins) {
  const CalibrationFit fit = pav_calibrate(record);
  ReliabilityDiagram d;
  d.name = record.name;
  for (std::size_t k = 0; k < fit.sorted_forecasts.size(); ++k) {
    if (k == 0 || fit.sorted_forecasts[k] != fit.sorted_forecasts[k - 1]) {
      d.points.push_back({fit.sorted_forecasts[k], fit.recalibrated[k]});
    }
  }
  for (const auto& b : fit.blocks) {
    d.bins.push_back({fit.sorted_forecasts[b.begin], fit.sorted_forecasts[b.end - 1], b.value,
                      b.end - b.begin, static_cast<std::size_t>(std::lround(b.events))});
  }
  d.histogram = forecast_histogram(record.forecasts, histogram_bins);
  return d;
}

double type1_quantile(std::span<const double> sorted, double p) {
  const double size = static_cast<double>(sorted.size());
  auto k = static_cast<std::ptrdiff_t>(std::ceil(p * size - 1e-9));
  k = std::clamp<std::ptrdiff_t>(k, 1, static_cast<std::ptrdiff_t>(sorted.size()));
  return sorted[static_cast<std::size_t>(k - 1)];
}

ConsistencyBand consistency_band(std::span<const double> forecasts, double level,
                                 std::size_t replicates, std::uint64_t seed, unsigned threads) {
  if (!(level > 0.0 && level < 1.0)) throw std::invalid_argument("band level must lie in (0,1)");
  if (replicates == 0) throw std::invalid_argument("band needs at least one replicate");
  if (forecasts.empty()) throw DataError("band needs at least one forecast");
  for (double x : forecasts) {
    if (!(x >= 0.0 && x <= 1.0)) throw DataError("forecast outside [0,1]");
  }

  std::vector<double> sorted(forecasts.begin(), forecasts.end());
  std::sort(sorted.begin(), sorted.end());
  ConsistencyBand band;
  band.level = level;
  band.replicates = replicates;
  band.seed = seed;
  std::vector<double> weights;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k == 0 || sorted[k] != sorted[k - 1]) {
      band.forecasts.push_back(sorted[k]);
      weights.push_back(0.0);
    }
    weights.back() += 1.0;
  }
  const std::size_t groups = band.forecasts.size();

  // values[g * replicates + b] is the refitted curve at group g in replicate b.
  std::vector<double> values(groups * replicates);
  auto run = [&](std::size_t first, std::size_t last) {
    std::vector<double> sums(groups);
    for (std::size_t b = first; b < last; ++b) {
      CounterRng rng(seed, b);
      std::size_t row = 0;
      for (std::size_t g = 0; g < groups; ++g) {
        double s = 0.0;
        const auto w = static_cast<std::size_t>(weights[g]);
        for (std::size_t i = 0; i < w; ++i, ++row) s += rng.bernoulli(sorted[row]);
        sums[g] = s;
      }
      const auto iso = isotonic_blocks(sums, weights);
      for (std::size_t blk = 0; blk < iso.size(); ++blk) {
        const std::size_t end = blk + 1 < iso.size() ? iso.first_point[blk + 1] : groups;
        const double v = iso.mean(blk);
        for (std::size_t g = iso.first_point[blk]; g < end; ++g) values[g * replicates + b] = v;
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(replicates)));
  if (workers == 1) {
    run(0, replicates);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (replicates + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t first = w * chunk;
      const std::size_t last = std::min(replicates, first + chunk);
      if (first < last) pool.emplace_back(run, first, last);
    }
    for (auto& t : pool) t.join();
  }

  const double p_lo = (1.0 - level) / 2.0;
  const double p_hi = (1.0 + level) / 2.0;
  band.lower.resize(groups);
  band.upper.resize(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    std::span<double> col(values.data() + g * replicates, replicates);
    std::sort(col.begin(), col.end());
    band.lower[g] = type1_quantile(col, p_lo);
    band.upper[g] = type1_quantile(col, p_hi);
  }
  return band;
}

}  // namespace triptych
