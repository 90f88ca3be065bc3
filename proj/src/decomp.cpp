#include "triptych/decomp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "triptych/error.hpp"
#include "triptych/pav.hpp"

namespace triptych {

ScoreDecomposition corp_decomposition(const ScoringRule& rule, const ForecastRecord& record) {
  validate(record);
  ScoreDecomposition d;
  d.rule = rule;
  d.name = record.name;
  d.n = record.size();
  d.mean = mean_score(rule, record);

  const ForecastRecord calibrated = recalibrate(record);
  d.s_c = mean_score(rule, calibrated).finite_value();

  const double r = class_priors(record.outcomes).r;
  ForecastRecord reference{std::vector<double>(record.size(), r), record.outcomes, record.name};
  d.s_r = mean_score(rule, reference).finite_value();

  d.mcb = d.mean - ExtendedReal(d.s_c);
  d.dsc = d.s_r - d.s_c;
  d.unc = d.s_r;
  return d;
}

std::string contour_label(double level) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", level);
  return buf;
}

McbDscPlot mcb_dsc_plot(std::span<const ScoreDecomposition> decomps, std::size_t levels) {
  if (decomps.empty()) throw DataError("MCB-DSC plot needs at least one decomposition");
  McbDscPlot plot;
  plot.rule = decomps.front().rule;
  plot.unc = decomps.front().unc;
  double lo = plot.unc;
  double hi = plot.unc;
  for (const auto& d : decomps) {
    if (!(d.rule == plot.rule)) throw DegenerateError("decompositions use different scoring rules");
    if (std::abs(d.unc - plot.unc) > 1e-12) {
      throw DegenerateError("decompositions have different uncertainty components");
    }
    McbDscPoint p{d.name, d.mcb, d.dsc, d.mean, d.mcb.is_infinite()};
    if (d.mean.is_finite()) {
      lo = std::min(lo, d.mean.value());
      hi = std::max(hi, d.mean.value());
    }
    plot.points.push_back(std::move(p));
  }
  if (levels > 0 && (levels == 1 || hi == lo)) {
    plot.contours.push_back({lo, contour_label(lo)});
  } else {
    for (std::size_t k = 0; k < levels; ++k) {
      const double level = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(levels - 1);
      plot.contours.push_back({level, contour_label(level)});
    }
  }
  plot.baseline = {plot.unc, contour_label(plot.unc)};
  return plot;
}

}  // namespace triptych
