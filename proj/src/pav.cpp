#include "triptych/pav.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "triptych/error.hpp"

namespace triptych {

IsotonicBlocks isotonic_blocks(std::span<const double> sums, std::span<const double> weights) {
  if (sums.size() != weights.size()) throw std::invalid_argument("sums and weights differ in length");
  IsotonicBlocks out;
  out.first_point.reserve(sums.size());
  out.sum.reserve(sums.size());
  out.weight.reserve(sums.size());
  for (std::size_t k = 0; k < sums.size(); ++k) {
    if (!(weights[k] > 0.0)) throw std::invalid_argument("PAV weights must be positive");
    out.first_point.push_back(k);
    out.sum.push_back(sums[k]);
    out.weight.push_back(weights[k]);
    // Pool while the previous block mean is not strictly below the last one.
    // Cross-multiplied so that integer-valued data compares exactly.
    while (out.size() >= 2) {
      const std::size_t top = out.size() - 1;
      const std::size_t prev = top - 1;
      if (out.sum[prev] * out.weight[top] < out.sum[top] * out.weight[prev]) break;
      out.sum[prev] += out.sum[top];
      out.weight[prev] += out.weight[top];
      out.first_point.pop_back();
      out.sum.pop_back();
      out.weight.pop_back();
    }
  }
  return out;
}

std::vector<double> CalibrationFit::recalibrated_in_original_order() const {
  std::vector<double> out(recalibrated.size());
  for (std::size_t k = 0; k < permutation.size(); ++k) out[permutation[k]] = recalibrated[k];
  return out;
}

CalibrationFit pav_calibrate(const ForecastRecord& record) {
  validate(record);
  const std::size_t n = record.size();
  CalibrationFit fit;
  fit.permutation.resize(n);
  std::iota(fit.permutation.begin(), fit.permutation.end(), std::size_t{0});
  std::stable_sort(fit.permutation.begin(), fit.permutation.end(), [&](std::size_t a, std::size_t b) {
    return record.forecasts[a] < record.forecasts[b];
  });
  fit.sorted_forecasts.resize(n);
  fit.sorted_outcomes.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    fit.sorted_forecasts[k] = record.forecasts[fit.permutation[k]];
    fit.sorted_outcomes[k] = record.outcomes[fit.permutation[k]];
  }

  // Pre-pool ties into one weighted point per distinct forecast value.
  std::vector<double> sums;
  std::vector<double> weights;
  std::vector<std::size_t> group_start;
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0 || fit.sorted_forecasts[k] != fit.sorted_forecasts[k - 1]) {
      group_start.push_back(k);
      sums.push_back(0.0);
      weights.push_back(0.0);
    }
    sums.back() += fit.sorted_outcomes[k];
    weights.back() += 1.0;
  }
  group_start.push_back(n);

  const auto iso = isotonic_blocks(sums, weights);
  fit.recalibrated.resize(n);
  fit.blocks.reserve(iso.size());
  for (std::size_t b = 0; b < iso.size(); ++b) {
    const std::size_t first_group = iso.first_point[b];
    const std::size_t last_group = b + 1 < iso.size() ? iso.first_point[b + 1] : sums.size();
    CalibrationBlock block;
    block.begin = group_start[first_group];
    block.end = group_start[last_group];
    block.value = iso.mean(b);
    block.weight = iso.weight[b];
    block.events = iso.sum[b];
    std::fill(fit.recalibrated.begin() + static_cast<std::ptrdiff_t>(block.begin),
              fit.recalibrated.begin() + static_cast<std::ptrdiff_t>(block.end), block.value);
    fit.blocks.push_back(block);
  }
  return fit;
}

ForecastRecord apply_recalibration(const CalibrationFit& fit, const ForecastRecord& record) {
  if (fit.permutation.size() != record.size()) {
    throw DataError("recalibration fit and record differ in length");
  }
  for (std::size_t k = 0; k < fit.permutation.size(); ++k) {
    const std::size_t row = fit.permutation[k];
    if (record.forecasts[row] != fit.sorted_forecasts[k] ||
        record.outcomes[row] != fit.sorted_outcomes[k]) {
      throw DataError("recalibration fit was not computed from this record");
    }
  }
  ForecastRecord out;
  out.name = record.name;
  out.outcomes = record.outcomes;
  out.forecasts = fit.recalibrated_in_original_order();
  return out;
}

ForecastRecord recalibrate(const ForecastRecord& record) {
  return apply_recalibration(pav_calibrate(record), record);
}

}  // namespace triptych
