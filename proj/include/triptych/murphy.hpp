#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "triptych/data.hpp"
#include "triptych/scoring.hpp"

namespace triptych {

// Mean elementary score on an open interval between knots:
//   S̄_θ = a + bθ = (2θ·false_alarms + 2(1−θ)·misses) / n
// where false_alarms = #{x > θ, y = 0} and misses = #{x < θ, y = 1}.
struct MurphySegment {
  double lo = 0.0;
  double hi = 0.0;
  double a = 0.0;
  double b = 0.0;
  std::size_t false_alarms = 0;
  std::size_t misses = 0;
};

// Exact piecewise-linear Murphy curve θ ↦ S̄_θ.
//
// `knots` are the distinct forecast values together with 0 and 1.
// `segments[j]` covers (knots[j], knots[j+1]). `knot_values[j]` is S̄_θ at
// knots[j] including the tie term; at 0 and 1 it holds the one-sided limit.
struct MurphyCurve {
  std::vector<double> knots;
  std::vector<MurphySegment> segments;
  std::vector<double> knot_values;
  std::size_t n = 0;
  std::string name;

  // Knot indices whose value differs from both one-sided segment limits.
  std::vector<std::size_t> marked_knots(double tol = 1e-12) const;
};

MurphyCurve murphy_curve(const ForecastRecord& record);

// Knot value when θ is a knot, segment value otherwise. θ must lie in (0,1).
double murphy_value(const MurphyCurve& curve, double theta);

// ∫_0^1 S̄_θ dθ, which equals the mean Brier score.
double murphy_area(const MurphyCurve& curve);

// ∫_0^1 S̄_θ h(θ) dθ for the mixing density of `rule`, evaluated in closed
// form per segment. Equals mean_score(rule, record); +infinity when the
// integral diverges (Log with a forecast of 0 for an event or 1 for a
// non-event). Point-mass rules evaluate the curve at their threshold.
ExtendedReal weighted_murphy_area(const MurphyCurve& curve, const ScoringRule& rule);

}  // namespace triptych
