#include "triptych/murphy.hpp"

#include <algorithm>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace triptych {

namespace {

double segment_value(const MurphySegment& s, double theta, std::size_t n) {
  return (2.0 * theta * static_cast<double>(s.false_alarms) +
          2.0 * (1.0 - theta) * static_cast<double>(s.misses)) /
         static_cast<double>(n);
}

}  // namespace

std::vector<std::size_t> MurphyCurve::marked_knots(double tol) const {
  std::vector<std::size_t> marked;
  for (std::size_t j = 1; j + 1 < knots.size(); ++j) {
    const double left = segment_value(segments[j - 1], knots[j], n);
    const double right = segment_value(segments[j], knots[j], n);
    if (std::abs(knot_values[j] - left) > tol && std::abs(knot_values[j] - right) > tol) {
      marked.push_back(j);
    }
  }
  return marked;
}

MurphyCurve murphy_curve(const ForecastRecord& record) {
  validate(record);
  const std::size_t n = record.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return record.forecasts[a] < record.forecasts[b]; });

  MurphyCurve curve;
  curve.n = n;
  curve.name = record.name;
  std::vector<std::size_t> zeros_at;
  std::vector<std::size_t> ones_at;
  auto add_knot = [&](double k) {
    curve.knots.push_back(k);
    zeros_at.push_back(0);
    ones_at.push_back(0);
  };
  if (record.forecasts[order.front()] > 0.0) add_knot(0.0);
  for (std::size_t idx : order) {
    const double x = record.forecasts[idx];
    if (curve.knots.empty() || curve.knots.back() != x) add_knot(x);
    (record.outcomes[idx] == 1 ? ones_at : zeros_at).back()++;
  }
  if (curve.knots.back() < 1.0) add_knot(1.0);

  const std::size_t m = curve.knots.size();
  const std::size_t total_zeros = std::accumulate(zeros_at.begin(), zeros_at.end(), std::size_t{0});
  std::vector<std::size_t> ones_le(m);
  std::vector<std::size_t> zeros_gt(m);
  std::size_t ones = 0;
  std::size_t zeros = 0;
  for (std::size_t j = 0; j < m; ++j) {
    ones += ones_at[j];
    zeros += zeros_at[j];
    ones_le[j] = ones;
    zeros_gt[j] = total_zeros - zeros;
  }

  const double nd = static_cast<double>(n);
  curve.segments.reserve(m - 1);
  for (std::size_t j = 0; j + 1 < m; ++j) {
    MurphySegment s;
    s.lo = curve.knots[j];
    s.hi = curve.knots[j + 1];
    s.misses = ones_le[j];
    s.false_alarms = zeros_gt[j];
    s.a = 2.0 * static_cast<double>(s.misses) / nd;
    s.b = 2.0 * (static_cast<double>(s.false_alarms) - static_cast<double>(s.misses)) / nd;
    curve.segments.push_back(s);
  }

  curve.knot_values.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const double k = curve.knots[j];
    if (j == 0) {
      curve.knot_values[j] = segment_value(curve.segments.front(), k, n);
    } else if (j + 1 == m) {
      curve.knot_values[j] = segment_value(curve.segments.back(), k, n);
    } else {
      const double ties = static_cast<double>(zeros_at[j] + ones_at[j]);
      const double ones_lt = static_cast<double>(ones_le[j] - ones_at[j]);
      curve.knot_values[j] = (2.0 * k * static_cast<double>(zeros_gt[j]) +
                              2.0 * (1.0 - k) * ones_lt + 2.0 * k * (1.0 - k) * ties) /
                             nd;
    }
  }
  return curve;
}

double murphy_value(const MurphyCurve& curve, double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("threshold outside (0,1)");
  auto it = std::lower_bound(curve.knots.begin(), curve.knots.end(), theta);
  const auto j = static_cast<std::size_t>(it - curve.knots.begin());
  if (it != curve.knots.end() && *it == theta) return curve.knot_values[j];
  return segment_value(curve.segments[j - 1], theta, curve.n);
}

double murphy_area(const MurphyCurve& curve) {
  double acc = 0.0;
  for (const auto& s : curve.segments) {
    const double up = s.hi * s.hi - s.lo * s.lo;
    const double down = (1.0 - s.lo) * (1.0 - s.lo) - (1.0 - s.hi) * (1.0 - s.hi);
    acc += static_cast<double>(s.false_alarms) * up + static_cast<double>(s.misses) * down;
  }
  return acc / static_cast<double>(curve.n);
}

ExtendedReal weighted_murphy_area(const MurphyCurve& curve, const ScoringRule& rule) {
  const double nd = static_cast<double>(curve.n);
  switch (rule.kind()) {
    case RuleKind::brier: return murphy_area(curve);
    case RuleKind::zero_one:
    case RuleKind::elementary: return murphy_value(curve, rule.theta());
    case RuleKind::log: {
      // ∫ (2θ·fa + 2(1−θ)·m) / (2θ(1−θ)) dθ = fa·log((1−lo)/(1−hi)) + m·log(hi/lo)
      double acc = 0.0;
      for (const auto& s : curve.segments) {
        if (s.misses > 0) {
          if (s.lo == 0.0) return ExtendedReal::infinity();
          acc += static_cast<double>(s.misses) * (std::log(s.hi) - std::log(s.lo));
        }
        if (s.false_alarms > 0) {
          if (s.hi == 1.0) return ExtendedReal::infinity();
          acc += static_cast<double>(s.false_alarms) * (std::log1p(-s.lo) - std::log1p(-s.hi));
        }
      }
      return acc / nd;
    }
    case RuleKind::beta: {
      const double al = rule.alpha();
      const double be = rule.beta_param();
      auto inc = [](double p, double q, double lo, double hi) {
        return boost::math::beta(p, q, hi) - boost::math::beta(p, q, lo);
      };
      double acc = 0.0;
      for (const auto& s : curve.segments) {
        if (s.misses > 0) acc += static_cast<double>(s.misses) * inc(al, be + 1.0, s.lo, s.hi);
        if (s.false_alarms > 0) acc += static_cast<double>(s.false_alarms) * inc(al + 1.0, be, s.lo, s.hi);
      }
      return 2.0 * acc / nd;
    }
  }
  return 0.0;
}

}  // namespace triptych
