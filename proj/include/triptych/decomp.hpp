#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "triptych/data.hpp"
#include "triptych/scoring.hpp"

namespace triptych {

// CORP decomposition S̄ = MCB − DSC + UNC with
//   MCB = S̄ − S̄_C,  DSC = S̄_R − S̄_C,  UNC = S̄_R,
// where S̄_C scores the PAV-recalibrated forecasts and S̄_R the constant
// event frequency r.
struct ScoreDecomposition {
  ScoringRule rule;
  std::string name;
  ExtendedReal mean;
  ExtendedReal mcb;
  double dsc = 0.0;
  double unc = 0.0;
  double s_c = 0.0;
  double s_r = 0.0;
  std::size_t n = 0;
};

ScoreDecomposition corp_decomposition(const ScoringRule& rule, const ForecastRecord& record);

struct McbDscPoint {
  std::string name;
  ExtendedReal mcb;
  double dsc = 0.0;
  ExtendedReal mean;
  bool margin = false;  // infinite MCB, drawn on the right margin
};

// Iso-score line dsc = mcb + unc − level.
struct McbDscContour {
  double level = 0.0;
  std::string label;
};

struct McbDscPlot {
  ScoringRule rule;
  double unc = 0.0;
  std::vector<McbDscPoint> points;
  std::vector<McbDscContour> contours;
  // The line through the origin with level unc; points above it beat the
  // best constant forecast.
  McbDscContour baseline;
};

// Throws DataError for an empty list and DegenerateError when rules differ or
// UNC values differ by more than 1e-12. Contours are `levels` equally spaced
// scores spanning the finite means and unc.
McbDscPlot mcb_dsc_plot(std::span<const ScoreDecomposition> decomps, std::size_t levels = 5);

// Fixed three-decimal label.
std::string contour_label(double level);

}  // namespace triptych
