#include "triptych/roc.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "triptych/pav.hpp"

namespace triptych {

RocCurve roc_curve(const ForecastRecord& record) {
  validate(record);
  require_both_classes(record.outcomes, "ROC curve");
  const std::size_t n = record.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return record.forecasts[a] > record.forecasts[b]; });
  const auto priors = class_priors(record.outcomes);
  const double n0 = static_cast<double>(priors.n0);
  const double n1 = static_cast<double>(priors.n1);

  RocCurve curve;
  curve.name = record.name;
  curve.vertices.push_back({0.0, 0.0});
  curve.thresholds.push_back(record.forecasts[order.front()]);
  std::size_t hits = 0;
  std::size_t false_alarms = 0;
  for (std::size_t k = 0; k < n;) {
    const double x = record.forecasts[order[k]];
    for (; k < n && record.forecasts[order[k]] == x; ++k) {
      (record.outcomes[order[k]] == 1 ? hits : false_alarms)++;
    }
    const double t = k < n ? record.forecasts[order[k]] : -std::numeric_limits<double>::infinity();
    curve.vertices.push_back({static_cast<double>(false_alarms) / n0, static_cast<double>(hits) / n1});
    curve.thresholds.push_back(t);
  }
  curve.auc = auc(curve);
  return curve;
}

RocCurve concave_roc(const ForecastRecord& record) {
  validate(record);
  require_both_classes(record.outcomes, "ROC curve");
  RocCurve curve = roc_curve(recalibrate(record));
  curve.concave = true;
  return curve;
}

double auc(const RocCurve& curve) {
  double area = 0.0;
  for (std::size_t k = 1; k < curve.vertices.size(); ++k) {
    const auto& p = curve.vertices[k - 1];
    const auto& q = curve.vertices[k];
    area += (q.far - p.far) * (p.hr + q.hr) / 2.0;
  }
  return area;
}

}  // namespace triptych
