#pragma once

#include <string>
#include <vector>

#include "triptych/data.hpp"

namespace triptych {

struct RocPoint {
  double far = 0.0;  // false alarm rate
  double hr = 0.0;   // hit rate
};

// ROC polyline from (0,0) to (1,1). Vertex k classifies x > thresholds[k] as
// an event; the first threshold is the largest forecast value and the last
// is -infinity.
struct RocCurve {
  std::vector<RocPoint> vertices;
  std::vector<double> thresholds;
  bool concave = false;
  double auc = 0.0;
  std::string name;
};

// Raw ROC curve with one vertex per distinct forecast value. Cases tied at a
// forecast value enter together, giving a single sloped segment. Throws
// DegenerateError unless both outcome classes occur.
RocCurve roc_curve(const ForecastRecord& record);

// ROC curve of the PAV-recalibrated record, which is the concave hull of the
// raw curve.
RocCurve concave_roc(const ForecastRecord& record);

// Trapezoidal area under the vertex polyline.
double auc(const RocCurve& curve);

}  // namespace triptych
