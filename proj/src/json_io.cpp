#include "triptych/json_io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace triptych {

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double parse_number_or_inf(const json& j) {
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("expected a number or \"inf\", got \"" + s + "\"");
  }
  return j.get<double>();
}

void to_json(json& j, const ExtendedReal& v) {
  if (v.is_infinite()) {
    j = "inf";
  } else {
    j = v.value();
  }
}

void from_json(const json& j, ExtendedReal& v) {
  if (j.is_string()) {
    v = ExtendedReal::parse(j.get<std::string>());
  } else {
    v = ExtendedReal(j.get<double>());
  }
}

void to_json(json& j, const ScoringRule& rule) { j = rule.name(); }

void from_json(const json& j, ScoringRule& rule) { rule = ScoringRule::parse(j.get<std::string>()); }

void to_json(json& j, const MurphyCurve& c) {
  json segs = json::array();
  for (const auto& s : c.segments) {
    segs.push_back({{"lo", s.lo}, {"hi", s.hi}, {"a", s.a}, {"b", s.b},
                    {"false_alarms", s.false_alarms}, {"misses", s.misses}});
  }
  json marked = json::array();
  for (std::size_t k : c.marked_knots()) marked.push_back(c.knots[k]);
  j = {{"name", c.name}, {"n", c.n}, {"knots", c.knots}, {"segments", segs}, {"knot_values", c.knot_values},
       {"marked_knots", marked}};
}

void from_json(const json& j, MurphyCurve& c) {
  c = MurphyCurve{};
  c.name = j.value("name", std::string{});
  c.n = j.at("n").get<std::size_t>();
  c.knots = j.at("knots").get<std::vector<double>>();
  c.knot_values = j.at("knot_values").get<std::vector<double>>();
  for (const auto& s : j.at("segments")) {
    MurphySegment seg;
    seg.lo = s.at("lo").get<double>();
    seg.hi = s.at("hi").get<double>();
    seg.a = s.at("a").get<double>();
    seg.b = s.at("b").get<double>();
    seg.false_alarms = s.at("false_alarms").get<std::size_t>();
    seg.misses = s.at("misses").get<std::size_t>();
    c.segments.push_back(seg);
  }
}

void to_json(json& j, const ReliabilityDiagram& d) {
  json xs = json::array();
  json ceps = json::array();
  for (const auto& p : d.points) {
    xs.push_back(p.forecast);
    ceps.push_back(p.cep);
  }
  json bins = json::array();
  for (const auto& b : d.bins) {
    bins.push_back({{"lo", b.lo}, {"hi", b.hi}, {"cep", b.cep}, {"count", b.count}, {"events", b.events}});
  }
  j = {{"name", d.name},
       {"forecasts", xs},
       {"cep", ceps},
       {"bins", bins},
       {"histogram", {{"edges", d.histogram.edges}, {"counts", d.histogram.counts}}}};
  if (d.band) {
    j["band"] = {{"level", d.band->level},
                 {"replicates", d.band->replicates},
                 {"seed", d.band->seed},
                 {"pointwise", d.band->pointwise},
                 {"forecasts", d.band->forecasts},
                 {"lower", d.band->lower},
                 {"upper", d.band->upper}};
  } else {
    j["band"] = nullptr;
  }
}

void from_json(const json& j, ReliabilityDiagram& d) {
  d = ReliabilityDiagram{};
  d.name = j.value("name", std::string{});
  const auto xs = j.at("forecasts").get<std::vector<double>>();
  const auto ceps = j.at("cep").get<std::vector<double>>();
  if (xs.size() != ceps.size()) throw std::invalid_argument("reliability arrays differ in length");
  for (std::size_t k = 0; k < xs.size(); ++k) d.points.push_back({xs[k], ceps[k]});
  for (const auto& b : j.at("bins")) {
    d.bins.push_back({b.at("lo").get<double>(), b.at("hi").get<double>(), b.at("cep").get<double>(),
                      b.at("count").get<std::size_t>(), b.at("events").get<std::size_t>()});
  }
  d.histogram.edges = j.at("histogram").at("edges").get<std::vector<double>>();
  d.histogram.counts = j.at("histogram").at("counts").get<std::vector<std::size_t>>();
  if (j.contains("band") && !j.at("band").is_null()) {
    const auto& b = j.at("band");
    ConsistencyBand band;
    band.level = b.at("level").get<double>();
    band.replicates = b.at("replicates").get<std::size_t>();
    band.seed = b.at("seed").get<std::uint64_t>();
    band.pointwise = b.value("pointwise", true);
    band.forecasts = b.at("forecasts").get<std::vector<double>>();
    band.lower = b.at("lower").get<std::vector<double>>();
    band.upper = b.at("upper").get<std::vector<double>>();
    d.band = std::move(band);
  }
}

void to_json(json& j, const RocCurve& c) {
  json far = json::array();
  json hr = json::array();
  json thresholds = json::array();
  for (const auto& v : c.vertices) {
    far.push_back(v.far);
    hr.push_back(v.hr);
  }
  for (double t : c.thresholds) thresholds.push_back(number_or_inf(t));
  j = {{"name", c.name}, {"far", far}, {"hr", hr}, {"thresholds", thresholds},
       {"concave", c.concave}, {"auc", c.auc}};
}

void from_json(const json& j, RocCurve& c) {
  c = RocCurve{};
  c.name = j.value("name", std::string{});
  const auto far = j.at("far").get<std::vector<double>>();
  const auto hr = j.at("hr").get<std::vector<double>>();
  if (far.size() != hr.size()) throw std::invalid_argument("ROC arrays differ in length");
  for (std::size_t k = 0; k < far.size(); ++k) c.vertices.push_back({far[k], hr[k]});
  for (const auto& t : j.at("thresholds")) c.thresholds.push_back(parse_number_or_inf(t));
  c.concave = j.at("concave").get<bool>();
  c.auc = j.at("auc").get<double>();
}

void to_json(json& j, const ScoreDecomposition& d) {
  j = {{"name", d.name}, {"score", d.rule}, {"n", d.n},   {"mean", d.mean}, {"mcb", d.mcb},
       {"dsc", d.dsc},   {"unc", d.unc},    {"s_c", d.s_c}, {"s_r", d.s_r}};
}

void from_json(const json& j, ScoreDecomposition& d) {
  d = ScoreDecomposition{};
  d.name = j.value("name", std::string{});
  d.rule = j.at("score").get<ScoringRule>();
  d.n = j.at("n").get<std::size_t>();
  d.mean = j.at("mean").get<ExtendedReal>();
  d.mcb = j.at("mcb").get<ExtendedReal>();
  d.dsc = j.at("dsc").get<double>();
  d.unc = j.at("unc").get<double>();
  d.s_c = j.at("s_c").get<double>();
  d.s_r = j.at("s_r").get<double>();
}

void to_json(json& j, const McbDscPlot& p) {
  json points = json::array();
  for (const auto& pt : p.points) {
    points.push_back({{"name", pt.name}, {"mcb", pt.mcb}, {"dsc", pt.dsc}, {"mean", pt.mean},
                      {"margin", pt.margin}});
  }
  json contours = json::array();
  for (const auto& c : p.contours) contours.push_back({{"level", c.level}, {"label", c.label}});
  j = {{"score", p.rule},
       {"unc", p.unc},
       {"points", points},
       {"contours", contours},
       {"baseline", {{"level", p.baseline.level}, {"label", p.baseline.label}}}};
}

void from_json(const json& j, McbDscPlot& p) {
  p = McbDscPlot{};
  p.rule = j.at("score").get<ScoringRule>();
  p.unc = j.at("unc").get<double>();
  for (const auto& pt : j.at("points")) {
    p.points.push_back({pt.at("name").get<std::string>(), pt.at("mcb").get<ExtendedReal>(),
                        pt.at("dsc").get<double>(), pt.at("mean").get<ExtendedReal>(),
                        pt.at("margin").get<bool>()});
  }
  for (const auto& c : j.at("contours")) {
    p.contours.push_back({c.at("level").get<double>(), c.at("label").get<std::string>()});
  }
  p.baseline = {j.at("baseline").at("level").get<double>(), j.at("baseline").at("label").get<std::string>()};
}

void to_json(json& j, const PiecewiseFunction& f) {
  json pieces = json::array();
  for (const auto& p : f.pieces) pieces.push_back({{"a", p.a}, {"b", p.b}});
  j = {{"breakpoints", f.breakpoints}, {"pieces", pieces}};
  if (f.point_values) {
    j["point_values"] = *f.point_values;
  } else {
    j["point_values"] = nullptr;
  }
}

void from_json(const json& j, PiecewiseFunction& f) {
  f = PiecewiseFunction{};
  f.breakpoints = j.at("breakpoints").get<std::vector<double>>();
  for (const auto& p : j.at("pieces")) f.pieces.push_back({p.at("a").get<double>(), p.at("b").get<double>()});
  if (j.contains("point_values") && !j.at("point_values").is_null()) {
    f.point_values = j.at("point_values").get<std::vector<double>>();
  }
}

void to_json(json& j, const CrossingReport& r) {
  j = {{"first", r.first},
       {"second", r.second},
       {"tolerance", r.tolerance},
       {"murphy_sign_changes", r.murphy_sign_changes},
       {"roc_sign_changes", r.roc_sign_changes},
       {"cdf_sign_changes", r.cdf_sign_changes},
       {"murphy_dominates", to_string(r.murphy_dominates)},
       {"roc_dominates", to_string(r.roc_dominates)},
       {"sharper", to_string(r.sharper)},
       {"raw", {{"murphy_sign_changes", r.raw_murphy_sign_changes},
                {"murphy_dominates", to_string(r.raw_murphy_dominates)}}}};
}

void from_json(const json& j, CrossingReport& r) {
  r = CrossingReport{};
  r.first = j.value("first", std::string{});
  r.second = j.value("second", std::string{});
  r.tolerance = j.at("tolerance").get<double>();
  r.murphy_sign_changes = j.at("murphy_sign_changes").get<std::size_t>();
  r.roc_sign_changes = j.at("roc_sign_changes").get<std::size_t>();
  r.cdf_sign_changes = j.at("cdf_sign_changes").get<std::size_t>();
  r.murphy_dominates = parse_dominance(j.at("murphy_dominates").get<std::string>());
  r.roc_dominates = parse_dominance(j.at("roc_dominates").get<std::string>());
  r.sharper = parse_dominance(j.at("sharper").get<std::string>());
  r.raw_murphy_sign_changes = j.at("raw").at("murphy_sign_changes").get<std::size_t>();
  r.raw_murphy_dominates = parse_dominance(j.at("raw").at("murphy_dominates").get<std::string>());
}

}  // namespace triptych
