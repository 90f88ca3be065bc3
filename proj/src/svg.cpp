#include "triptych/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <utility>
#include <vector>

namespace triptych {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1b6ca8", "#d1495b", "#2e933c", "#edae49",
                                                  "#6a4c93", "#00798c", "#8c564b", "#444444"};

const char* color(std::size_t k) { return kPalette[k % kPalette.size()]; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double left = 0, top = 0, width = 0, height = 0;
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;

  double px(double x) const { return left + (x - x0) / (x1 - x0) * width; }
  double py(double y) const { return top + height - (y - y0) / (y1 - y0) * height; }
};

class Canvas {
 public:
  Canvas(int w, int h) {
    out_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << w << ' ' << h << "\" width=\"" << w
         << "\" height=\"" << h << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out_ << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  }

  void line(double xa, double ya, double xb, double yb, const char* stroke, double width = 1.0,
            const char* dash = nullptr) {
    out_ << "<line x1=\"" << fmt(xa) << "\" y1=\"" << fmt(ya) << "\" x2=\"" << fmt(xb) << "\" y2=\"" << fmt(yb)
         << "\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << '"';
    if (dash) out_ << " stroke-dasharray=\"" << dash << '"';
    out_ << "/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts, const char* stroke, double width = 1.5,
                const char* dash = nullptr) {
    out_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << '"';
    if (dash) out_ << " stroke-dasharray=\"" << dash << '"';
    out_ << " points=\"";
    write_points(thin(pts));
    out_ << "\"/>\n";
  }

  void polygon(const std::vector<std::pair<double, double>>& pts, const char* fill, double opacity) {
    out_ << "<polygon fill=\"" << fill << "\" fill-opacity=\"" << fmt(opacity) << "\" stroke=\"none\" points=\"";
    write_points(thin(pts));
    out_ << "\"/>\n";
  }

  void rect(double x, double y, double w, double h, const char* fill, double opacity, const char* stroke = "none") {
    out_ << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
         << "\" fill=\"" << fill << "\" fill-opacity=\"" << fmt(opacity) << "\" stroke=\"" << stroke << "\"/>\n";
  }

  void circle(double x, double y, double r, const char* fill, const char* stroke = "none") {
    out_ << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"" << fmt(r) << "\" fill=\"" << fill
         << "\" stroke=\"" << stroke << "\"/>\n";
  }

  void text(double x, double y, std::string_view s, const char* anchor = "start", const char* fill = "black",
            double rotate = 0.0) {
    out_ << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" text-anchor=\"" << anchor << "\" fill=\"" << fill
         << '"';
    if (rotate != 0.0) out_ << " transform=\"rotate(" << fmt(rotate) << ' ' << fmt(x) << ' ' << fmt(y) << ")\"";
    out_ << '>' << escape(s) << "</text>\n";
  }

  void axes(const Frame& f, std::string_view title, std::string_view xlabel, std::string_view ylabel) {
    rect(f.left, f.top, f.width, f.height, "none", 0.0, "#333333");
    for (int k = 0; k <= 4; ++k) {
      const double xv = f.x0 + (f.x1 - f.x0) * k / 4.0;
      const double yv = f.y0 + (f.y1 - f.y0) * k / 4.0;
      const double x = f.px(xv);
      const double y = f.py(yv);
      line(x, f.top + f.height, x, f.top + f.height + 4, "#333333");
      text(x, f.top + f.height + 15, tick_label(xv), "middle");
      line(f.left - 4, y, f.left, y, "#333333");
      text(f.left - 6, y + 4, tick_label(yv), "end");
    }
    text(f.left + f.width / 2, f.top - 6, title, "middle");
    text(f.left + f.width / 2, f.top + f.height + 30, xlabel, "middle");
    text(f.left - 34, f.top + f.height / 2, ylabel, "middle", "black", -90.0);
  }

  void legend(const Frame& f, std::size_t k, std::string_view label) {
    const double y = f.top + 12 + 14 * static_cast<double>(k);
    line(f.left + 8, y - 4, f.left + 24, y - 4, color(k), 2.0);
    text(f.left + 28, y, label);
  }

  void open_group(std::string_view id) { out_ << "<g id=\"" << escape(id) << "\">\n"; }
  void close_group() { out_ << "</g>\n"; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  // Drops points closer than a quarter pixel to the last kept one; the final
  // point is always kept.
  static std::vector<std::pair<double, double>> thin(const std::vector<std::pair<double, double>>& pts) {
    std::vector<std::pair<double, double>> kept;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (!kept.empty() && k + 1 < pts.size() && std::abs(pts[k].first - kept.back().first) < 0.25 &&
          std::abs(pts[k].second - kept.back().second) < 0.25) {
        continue;
      }
      kept.push_back(pts[k]);
    }
    return kept;
  }

  void write_points(const std::vector<std::pair<double, double>>& pts) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      if (k) out_ << ' ';
      out_ << fmt(pts[k].first) << ',' << fmt(pts[k].second);
    }
  }

  std::ostringstream out_;
};

Frame panel_frame(double ox, double oy, int size) {
  Frame f;
  f.left = ox + 50;
  f.top = oy + 25;
  f.width = size - 65;
  f.height = size - 65;
  return f;
}

double segment_at(const MurphySegment& s, double t, std::size_t n) {
  return (2.0 * t * static_cast<double>(s.false_alarms) + 2.0 * (1.0 - t) * static_cast<double>(s.misses)) /
         static_cast<double>(n);
}

void draw_murphy(Canvas& c, double ox, double oy, std::span<const MurphyCurve> curves, int size) {
  Frame f = panel_frame(ox, oy, size);
  double top = 0.0;
  for (const auto& curve : curves) {
    for (const auto& s : curve.segments) {
      top = std::max({top, segment_at(s, s.lo, curve.n), segment_at(s, s.hi, curve.n)});
    }
    for (double v : curve.knot_values) top = std::max(top, v);
  }
  f.y1 = std::max(0.1, std::ceil(top * 10.0 - 1e-9) / 10.0);
  c.open_group("murphy");
  c.axes(f, "Murphy curve", "threshold", "mean elementary score");
  for (std::size_t k = 0; k < curves.size(); ++k) {
    const auto& curve = curves[k];
    std::vector<std::pair<double, double>> pts;
    for (const auto& s : curve.segments) {
      pts.emplace_back(f.px(s.lo), f.py(segment_at(s, s.lo, curve.n)));
      pts.emplace_back(f.px(s.hi), f.py(segment_at(s, s.hi, curve.n)));
    }
    c.polyline(pts, color(k));
    double last_x = -1e9;
    double last_y = -1e9;
    for (std::size_t j : curve.marked_knots()) {
      const double x = f.px(curve.knots[j]);
      const double y = f.py(curve.knot_values[j]);
      if (std::abs(x - last_x) < 1.5 && std::abs(y - last_y) < 1.5) continue;
      c.circle(x, y, 2.0, color(k));
      last_x = x;
      last_y = y;
    }
    c.legend(f, k, curve.name);
  }
  c.close_group();
}

void draw_reliability(Canvas& c, double ox, double oy, std::span<const ReliabilityDiagram> diagrams, int size,
                      bool support_range) {
  Frame f = panel_frame(ox, oy, size);
  if (support_range) {
    double lo = 1.0;
    double hi = 0.0;
    for (const auto& d : diagrams) {
      for (const auto& p : d.points) {
        lo = std::min(lo, p.forecast);
        hi = std::max(hi, p.forecast);
      }
    }
    if (lo < hi) {
      f.x0 = lo;
      f.x1 = hi;
    }
  }
  c.open_group("reliability");
  for (std::size_t k = 0; k < diagrams.size(); ++k) {
    const auto& d = diagrams[k];
    if (!d.band || d.band->forecasts.empty()) continue;
    std::vector<std::pair<double, double>> poly;
    for (std::size_t g = 0; g < d.band->forecasts.size(); ++g) {
      poly.emplace_back(f.px(d.band->forecasts[g]), f.py(d.band->upper[g]));
    }
    for (std::size_t g = d.band->forecasts.size(); g-- > 0;) {
      poly.emplace_back(f.px(d.band->forecasts[g]), f.py(d.band->lower[g]));
    }
    c.polygon(poly, color(k), 0.15);
  }
  for (std::size_t k = 0; k < diagrams.size(); ++k) {
    const auto& h = diagrams[k].histogram;
    std::size_t peak = 1;
    for (auto v : h.counts) peak = std::max(peak, v);
    for (std::size_t b = 0; b < h.counts.size(); ++b) {
      const double lo = std::max(h.edges[b], f.x0);
      const double hi = std::min(h.edges[b + 1], f.x1);
      if (!(lo < hi) || h.counts[b] == 0) continue;
      const double height = 0.2 * f.height * static_cast<double>(h.counts[b]) / static_cast<double>(peak);
      c.rect(f.px(lo), f.top + f.height - height, f.px(hi) - f.px(lo), height, color(k), 0.25);
    }
  }
  c.axes(f, "Reliability diagram", "forecast value", "conditional event probability");
  c.line(f.px(f.x0), f.py(f.x0), f.px(f.x1), f.py(f.x1), "#999999", 1.0, "4 3");
  for (std::size_t k = 0; k < diagrams.size(); ++k) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& p : diagrams[k].points) pts.emplace_back(f.px(p.forecast), f.py(p.cep));
    c.polyline(pts, color(k));
    std::string label = diagrams[k].name;
    if (diagrams[k].band) label += " (pointwise band)";
    c.legend(f, k, label);
  }
  c.close_group();
}

void draw_roc(Canvas& c, double ox, double oy, std::span<const RocCurve> curves, int size) {
  const Frame f = panel_frame(ox, oy, size);
  c.open_group("roc");
  c.axes(f, "ROC curve", "false alarm rate", "hit rate");
  c.line(f.px(0), f.py(0), f.px(1), f.py(1), "#999999", 1.0, "4 3");
  for (std::size_t k = 0; k < curves.size(); ++k) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : curves[k].vertices) pts.emplace_back(f.px(v.far), f.py(v.hr));
    c.polyline(pts, color(k));
    char buf[32];
    std::snprintf(buf, sizeof buf, " AUC %.3f", curves[k].auc);
    c.legend(f, k, curves[k].name + buf);
  }
  c.close_group();
}

}  // namespace

std::string murphy_svg(std::span<const MurphyCurve> curves, const SvgOptions& opt) {
  Canvas c(opt.panel_size, opt.panel_size);
  draw_murphy(c, 0, 0, curves, opt.panel_size);
  return c.finish();
}

std::string reliability_svg(std::span<const ReliabilityDiagram> diagrams, const SvgOptions& opt) {
  Canvas c(opt.panel_size, opt.panel_size);
  draw_reliability(c, 0, 0, diagrams, opt.panel_size, opt.support_range);
  return c.finish();
}

std::string roc_svg(std::span<const RocCurve> curves, const SvgOptions& opt) {
  Canvas c(opt.panel_size, opt.panel_size);
  draw_roc(c, 0, 0, curves, opt.panel_size);
  return c.finish();
}

std::string triptych_svg(std::span<const MurphyCurve> murphy, std::span<const ReliabilityDiagram> reliability,
                         std::span<const RocCurve> roc, const SvgOptions& opt) {
  const int s = opt.panel_size;
  Canvas c(3 * s, s);
  draw_murphy(c, 0, 0, murphy, s);
  draw_reliability(c, s, 0, reliability, s, opt.support_range);
  draw_roc(c, 2 * s, 0, roc, s);
  return c.finish();
}

std::string mcbdsc_svg(const McbDscPlot& plot, const SvgOptions& opt) {
  const int size = opt.panel_size + 40;
  Canvas c(size, size);
  Frame f = panel_frame(0, 0, size);
  f.width -= 20;  // room for the margin column
  double xmax = 0.0;
  double ymax = plot.unc;
  for (const auto& p : plot.points) {
    if (p.mcb.is_finite()) xmax = std::max(xmax, p.mcb.value());
    ymax = std::max(ymax, p.dsc);
  }
  f.x1 = xmax > 0.0 ? xmax * 1.1 : 0.1;
  f.y1 = ymax > 0.0 ? ymax * 1.1 : 0.1;

  c.open_group("mcbdsc");
  c.axes(f, "MCB-DSC plot (" + plot.rule.name() + ")", "MCB", "DSC");
  auto draw_level = [&](const McbDscContour& level, const char* stroke, const char* dash) {
    const double shift = plot.unc - level.level;  // dsc = mcb + shift
    const double lo = std::max(f.x0, f.y0 - shift);
    const double hi = std::min(f.x1, f.y1 - shift);
    if (!(lo < hi)) return;
    c.line(f.px(lo), f.py(lo + shift), f.px(hi), f.py(hi + shift), stroke, 1.0, dash);
    c.text(f.px(hi) - 2, f.py(hi + shift) + 12, level.label, "end", stroke);
  };
  for (const auto& level : plot.contours) draw_level(level, "#aaaaaa", "3 3");
  draw_level(plot.baseline, "#333333", nullptr);

  const double margin_x = f.left + f.width + 12;
  c.line(margin_x, f.top, margin_x, f.top + f.height, "#cccccc", 1.0, "2 2");
  for (std::size_t k = 0; k < plot.points.size(); ++k) {
    const auto& p = plot.points[k];
    const double x = p.margin ? margin_x : f.px(p.mcb.value());
    const double y = f.py(p.dsc);
    c.circle(x, y, 3.0, color(k));
    c.text(x + 5, y - 4, p.name, "start", color(k));
  }
  c.close_group();
  return c.finish();
}

}  // namespace triptych
