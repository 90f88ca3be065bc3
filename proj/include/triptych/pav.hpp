#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "triptych/data.hpp"

namespace triptych {

// One PAV block over sorted positions [begin, end).
struct CalibrationBlock {
  std::size_t begin = 0;
  std::size_t end = 0;
  double value = 0.0;   // event frequency of the block
  double weight = 0.0;  // number of cases
  double events = 0.0;
};

// Isotonic (PAV) recalibration of a record.
//
// Rows are stably sorted by forecast value. `permutation[k]` is the original
// row index of the k-th sorted row, so `recalibrated[k]` belongs to row
// `permutation[k]`. Tied forecast values always share one block.
struct CalibrationFit {
  std::vector<double> sorted_forecasts;
  std::vector<int> sorted_outcomes;
  std::vector<double> recalibrated;
  std::vector<CalibrationBlock> blocks;
  std::vector<std::size_t> permutation;

  // Recalibrated values in the original row order.
  std::vector<double> recalibrated_in_original_order() const;
};

// Weighted isotonic least squares by pool-adjacent-violators.
//
// Point k carries `sums[k]` (weighted response total) and `weights[k] > 0`.
// Returns, per point, the index of its block; block means are strictly
// increasing. Runs in O(n) with a stack of blocks.
struct IsotonicBlocks {
  std::vector<std::size_t> first_point;  // first point index of each block
  std::vector<double> sum;
  std::vector<double> weight;

  std::size_t size() const { return sum.size(); }
  double mean(std::size_t b) const { return sum[b] / weight[b]; }
};

IsotonicBlocks isotonic_blocks(std::span<const double> sums, std::span<const double> weights);

CalibrationFit pav_calibrate(const ForecastRecord& record);

// Replaces the forecasts of `record` by the fitted values, original order.
// Throws DataError unless `fit` was computed from `record`.
ForecastRecord apply_recalibration(const CalibrationFit& fit, const ForecastRecord& record);

// pav_calibrate followed by apply_recalibration.
ForecastRecord recalibrate(const ForecastRecord& record);

}  // namespace triptych
