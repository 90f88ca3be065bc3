#include "triptych/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "triptych/error.hpp"
#include "triptych/pav.hpp"

namespace triptych {

namespace {

void require_shared_outcomes(const ForecastRecord& rec1, const ForecastRecord& rec2) {
  validate(rec1);
  validate(rec2);
  if (rec1.outcomes != rec2.outcomes) throw DataError("records do not share the same outcomes");
}

std::vector<double> sorted_copy(const std::vector<double>& v) {
  std::vector<double> out = v;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<double> union_support(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const MurphySegment& segment_at(const MurphyCurve& c, double t) {
  auto it = std::upper_bound(c.knots.begin(), c.knots.end(), t);
  const auto k = static_cast<std::size_t>(it - c.knots.begin());
  return c.segments[std::min(k, c.segments.size()) - 1];
}

}  // namespace

double PiecewiseFunction::evaluate(double t) const {
  if (breakpoints.empty() || t < breakpoints.front() || t > breakpoints.back()) {
    throw std::invalid_argument("evaluation point outside the function domain");
  }
  auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), t);
  const auto k = static_cast<std::size_t>(it - breakpoints.begin());
  if (*it == t) {
    if (point_values) return (*point_values)[k];
    return pieces[k == 0 ? 0 : k - 1].at(t);
  }
  return pieces[k - 1].at(t);
}

std::vector<double> PiecewiseFunction::samples() const {
  std::vector<double> out;
  out.reserve(breakpoints.size() + pieces.size());
  for (std::size_t k = 0; k < breakpoints.size(); ++k) {
    out.push_back(evaluate(breakpoints[k]));
    if (k < pieces.size()) out.push_back(pieces[k].at((breakpoints[k] + breakpoints[k + 1]) / 2.0));
  }
  return out;
}

std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::first: return "first";
    case Dominance::second: return "second";
    case Dominance::none: break;
  }
  return "none";
}

Dominance parse_dominance(std::string_view text) {
  if (text == "none") return Dominance::none;
  if (text == "first") return Dominance::first;
  if (text == "second") return Dominance::second;
  throw std::invalid_argument("unknown dominance value: " + std::string(text));
}

PiecewiseFunction murphy_difference(const MurphyCurve& c1, const MurphyCurve& c2) {
  if (c1.n != c2.n) throw DataError("Murphy curves built from different numbers of cases");
  PiecewiseFunction f;
  f.breakpoints = union_support(c1.knots, c2.knots);
  const std::size_t m = f.breakpoints.size();
  f.pieces.reserve(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double mid = (f.breakpoints[k] + f.breakpoints[k + 1]) / 2.0;
    const auto& s1 = segment_at(c1, mid);
    const auto& s2 = segment_at(c2, mid);
    f.pieces.push_back({(s1.a - s2.a) / 2.0, (s1.b - s2.b) / 2.0});
  }
  std::vector<double> values(m);
  values.front() = f.pieces.front().at(f.breakpoints.front());
  values.back() = f.pieces.back().at(f.breakpoints.back());
  for (std::size_t k = 1; k + 1 < m; ++k) {
    const double t = f.breakpoints[k];
    values[k] = (murphy_value(c1, t) - murphy_value(c2, t)) / 2.0;
  }
  f.point_values = std::move(values);
  return f;
}

PiecewiseFunction roc_difference(const ForecastRecord& rec1, const ForecastRecord& rec2) {
  require_shared_outcomes(rec1, rec2);
  require_both_classes(rec1.outcomes, "ROC difference");
  const std::vector<double> q1 = sorted_copy(rec1.forecasts);
  const std::vector<double> q2 = sorted_copy(rec2.forecasts);
  const std::size_t n = q1.size();
  const double nd = static_cast<double>(n);

  PiecewiseFunction f;
  f.breakpoints.resize(n + 1);
  std::vector<double> values(n + 1);
  f.pieces.reserve(n);
  double partial = 0.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const double c = static_cast<double>(j) / nd;
    f.breakpoints[j] = c;
    values[j] = partial / nd;
    if (j < n) {
      const double slope = q1[j] - q2[j];
      f.pieces.push_back({values[j] - slope * c, slope});
      partial += slope;
    }
  }
  f.point_values = std::move(values);
  return f;
}

PiecewiseFunction cdf_difference(const ForecastRecord& rec1, const ForecastRecord& rec2) {
  validate(rec1);
  validate(rec2);
  const EmpiricalDistribution e1(rec1.forecasts);
  const EmpiricalDistribution e2(rec2.forecasts);
  PiecewiseFunction f;
  f.breakpoints = union_support(e1.support(), e2.support());
  if (f.breakpoints.front() > 0.0) f.breakpoints.insert(f.breakpoints.begin(), 0.0);
  if (f.breakpoints.back() < 1.0) f.breakpoints.push_back(1.0);
  std::vector<double> values;
  values.reserve(f.breakpoints.size());
  for (double t : f.breakpoints) values.push_back(e1.cdf(t) - e2.cdf(t));
  for (std::size_t k = 0; k + 1 < values.size(); ++k) f.pieces.push_back({values[k], 0.0});
  f.point_values = std::move(values);
  return f;
}

std::size_t count_sign_changes(const PiecewiseFunction& f, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be nonnegative");
  std::size_t changes = 0;
  int last = 0;
  for (double v : f.samples()) {
    const int sign = v > tol ? 1 : (v < -tol ? -1 : 0);
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

Dominance dominance(const PiecewiseFunction& f, double tol) {
  bool above = false;
  bool below = false;
  for (double v : f.samples()) {
    above = above || v > tol;
    below = below || v < -tol;
  }
  if (below && !above) return Dominance::first;
  if (above && !below) return Dominance::second;
  return Dominance::none;
}

Dominance convex_order(const ForecastRecord& rec1, const ForecastRecord& rec2, double tol) {
  validate(rec1);
  validate(rec2);
  const EmpiricalDistribution e1(rec1.forecasts);
  const EmpiricalDistribution e2(rec2.forecasts);
  std::vector<double> points = union_support(e1.support(), e2.support());
  points.push_back(1.0);
  bool neg = false;
  bool pos = false;
  for (double t : points) {
    const double g = e1.cdf_integral(t) - e2.cdf_integral(t);
    neg = neg || g < -tol;
    pos = pos || g > tol;
  }
  // ∫_0^1 (F1 − F2) is the difference of means, which must vanish.
  const double ends = e1.cdf_integral(1.0) - e2.cdf_integral(1.0);
  if (std::abs(ends) > tol) return Dominance::none;
  if (!neg && pos) return Dominance::first;
  if (!pos && neg) return Dominance::second;
  return Dominance::none;
}

CrossingReport crossing_report(const ForecastRecord& rec1, const ForecastRecord& rec2, double tol) {
  require_shared_outcomes(rec1, rec2);
  require_both_classes(rec1.outcomes, "crossing report");
  const ForecastRecord r1 = recalibrate(rec1);
  const ForecastRecord r2 = recalibrate(rec2);

  CrossingReport report;
  report.tolerance = tol;
  report.first = rec1.name;
  report.second = rec2.name;

  const PiecewiseFunction mc = murphy_difference(murphy_curve(r1), murphy_curve(r2));
  const PiecewiseFunction roc = roc_difference(r1, r2);
  report.murphy_sign_changes = count_sign_changes(mc, tol);
  report.roc_sign_changes = count_sign_changes(roc, tol);
  report.cdf_sign_changes = count_sign_changes(cdf_difference(r1, r2), tol);
  report.murphy_dominates = dominance(mc, tol);
  report.roc_dominates = dominance(roc, tol);
  report.sharper = convex_order(r1, r2, tol);

  const PiecewiseFunction raw = murphy_difference(murphy_curve(rec1), murphy_curve(rec2));
  report.raw_murphy_sign_changes = count_sign_changes(raw, tol);
  report.raw_murphy_dominates = dominance(raw, tol);
  return report;
}

}  // namespace triptych
