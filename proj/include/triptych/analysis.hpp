#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "triptych/data.hpp"
#include "triptych/murphy.hpp"

namespace triptych {

struct AffinePiece {
  double a = 0.0;
  double b = 0.0;
  double at(double t) const { return a + b * t; }
};

// f(t) = pieces[k].at(t) on (breakpoints[k], breakpoints[k+1]). When
// `point_values` is set it holds f at each breakpoint; otherwise breakpoint
// values are taken from the piece on the left (the right one at the first).
struct PiecewiseFunction {
  std::vector<double> breakpoints;
  std::vector<AffinePiece> pieces;
  std::optional<std::vector<double>> point_values;

  double evaluate(double t) const;
  // f at every breakpoint and piece midpoint, in increasing order of t.
  std::vector<double> samples() const;
};

enum class Dominance { none, first, second };

std::string_view to_string(Dominance d);
Dominance parse_dominance(std::string_view text);

// D^MC(θ) = (S̄_θ(first) − S̄_θ(second)) / 2 on the union knot set. Throws
// DataError if the curves were built from different numbers of cases.
PiecewiseFunction murphy_difference(const MurphyCurve& c1, const MurphyCurve& c2);

// D^ROC(c) = ∫_0^c (Q1(α) − Q2(α)) dα from the empirical quantile functions,
// linear between the breakpoints j/n. Both records must share outcomes and
// be calibrated in sample.
PiecewiseFunction roc_difference(const ForecastRecord& rec1, const ForecastRecord& rec2);

// F1 − F2 for the empirical CDFs of the forecast values, constant between
// consecutive points of the union support.
PiecewiseFunction cdf_difference(const ForecastRecord& rec1, const ForecastRecord& rec2);

// Alternations of sign over samples(); samples with |f| <= tol count as zero.
std::size_t count_sign_changes(const PiecewiseFunction& f, double tol);

// `first` if f <= tol everywhere and f < −tol somewhere, `second` for the
// mirror image, `none` otherwise.
Dominance dominance(const PiecewiseFunction& f, double tol);

// `first` when the forecast values of rec1 exceed those of rec2 in convex
// order: equal means and ∫_0^θ (F1 − F2) >= −tol for all θ, strictly above
// tol somewhere. `second` for the mirror image.
Dominance convex_order(const ForecastRecord& rec1, const ForecastRecord& rec2, double tol);

struct CrossingReport {
  std::size_t murphy_sign_changes = 0;
  std::size_t roc_sign_changes = 0;
  std::size_t cdf_sign_changes = 0;
  double tolerance = 1e-10;
  Dominance murphy_dominates = Dominance::none;
  Dominance roc_dominates = Dominance::none;
  Dominance sharper = Dominance::none;
  // Murphy comparison of the forecasts as given, before recalibration.
  std::size_t raw_murphy_sign_changes = 0;
  Dominance raw_murphy_dominates = Dominance::none;
  std::string first;
  std::string second;
};

// Recalibrates both records, then compares them. Throws DataError when the
// outcomes differ and DegenerateError when only one class occurs.
CrossingReport crossing_report(const ForecastRecord& rec1, const ForecastRecord& rec2,
                               double tol = 1e-10);

}  // namespace triptych
