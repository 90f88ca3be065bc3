#include "triptych/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "triptych/analysis.hpp"
#include "triptych/data.hpp"
#include "triptych/decomp.hpp"
#include "triptych/error.hpp"
#include "triptych/format.hpp"
#include "triptych/json_io.hpp"
#include "triptych/murphy.hpp"
#include "triptych/reliability.hpp"
#include "triptych/roc.hpp"
#include "triptych/scoring.hpp"
#include "triptych/sim.hpp"
#include "triptych/svg.hpp"

namespace triptych::cli {

namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct Options {
  std::string input;
  bool long_format = false;
  std::vector<std::string> forecasters;
  std::vector<std::string> scores;
  std::string out;
  std::string format;
  double level = 0.9;
  std::size_t resamples = 1000;
  std::uint64_t seed = 1;
  bool concave = true;
  bool support_range = false;
  std::size_t bins = 10;
  double tol = 1e-10;
  std::string scenario = "A";
  std::size_t n = 100000;
  unsigned threads = 1;
};

void write_atomic(const fs::path& path, const std::string& content) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw DataError("cannot write " + tmp.string());
    f << content;
    if (!f.flush()) throw DataError("cannot write " + tmp.string());
  }
  fs::rename(tmp, path);
}

void emit(const Options& opt, std::ostream& out, const std::string& content) {
  if (opt.out.empty()) {
    out << content;
  } else {
    write_atomic(opt.out, content);
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

Dataset load(const Options& opt, std::istream& in) {
  const CsvFormat fmt = opt.long_format ? CsvFormat::long_ : CsvFormat::wide;
  Dataset data;
  if (opt.input.empty() || opt.input == "-") {
    data = parse_csv(in, fmt);
  } else {
    std::ifstream f(opt.input, std::ios::binary);
    if (!f) throw DataError("cannot read input file " + opt.input);
    data = parse_csv(f, fmt);
  }
  if (!opt.forecasters.empty()) data = data.select(opt.forecasters);
  return complete_cases(data);
}

std::vector<ForecastRecord> records(const Dataset& data) {
  std::vector<ForecastRecord> out;
  for (const auto& name : data.column_names()) out.push_back(data.record(name));
  return out;
}

void require_format(const Options& opt, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed) {
    if (opt.format == f) return;
  }
  throw UsageError("format '" + opt.format + "' is not available for this command");
}

std::string csv_line(std::initializer_list<std::string> cells) {
  std::string line;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) line += ',';
    first = false;
    line += c;
  }
  return line + "\n";
}

std::vector<ScoringRule> rules(const Options& opt) {
  std::vector<ScoringRule> out;
  for (const auto& s : opt.scores) out.push_back(ScoringRule::parse(s));
  return out;
}

std::vector<ScoreDecomposition> decompose_all(const Options& opt, const Dataset& data) {
  const ScoringRule rule = ScoringRule::parse(opt.scores.empty() ? "brier" : opt.scores.front());
  std::vector<ScoreDecomposition> out;
  for (const auto& r : records(data)) out.push_back(corp_decomposition(rule, r));
  return out;
}

void cmd_decompose(const Options& opt, std::istream& in, std::ostream& out) {
  require_format(opt, {"json", "csv"});
  const auto decomps = decompose_all(opt, load(opt, in));
  if (opt.format == "csv") {
    std::string s = csv_line({"forecaster", "score", "mean", "mcb", "dsc", "unc"});
    for (const auto& d : decomps) {
      s += csv_line({d.name, d.rule.name(), d.mean.to_string(), d.mcb.to_string(), shortest(d.dsc),
                     shortest(d.unc)});
    }
    emit(opt, out, s);
    return;
  }
  json j = {{"score", decomps.front().rule}, {"unc", decomps.front().unc}, {"decompositions", decomps}};
  emit(opt, out, dump(j));
}

void cmd_scores(const Options& opt, std::istream& in, std::ostream& out) {
  require_format(opt, {"json", "csv"});
  const Dataset data = load(opt, in);
  std::vector<ScoringRule> rs = rules(opt);
  if (rs.empty()) rs = {ScoringRule::brier(), ScoringRule::log(), ScoringRule::zero_one()};
  if (opt.format == "csv") {
    std::string s = "forecaster";
    for (const auto& r : rs) s += "," + r.name();
    s += "\n";
    for (const auto& rec : records(data)) {
      s += rec.name;
      for (const auto& r : rs) s += "," + mean_score(r, rec).to_string();
      s += "\n";
    }
    emit(opt, out, s);
    return;
  }
  json rows = json::array();
  for (const auto& rec : records(data)) {
    json scores = json::object();
    for (const auto& r : rs) scores[r.name()] = mean_score(r, rec);
    rows.push_back({{"name", rec.name}, {"n", rec.size()}, {"scores", scores}});
  }
  emit(opt, out, dump({{"forecasters", rows}}));
}

std::vector<MurphyCurve> murphy_all(const Dataset& data) {
  std::vector<MurphyCurve> out;
  for (const auto& r : records(data)) out.push_back(murphy_curve(r));
  return out;
}

std::vector<ReliabilityDiagram> reliability_all(const Options& opt, const Dataset& data) {
  std::vector<ReliabilityDiagram> out;
  for (const auto& r : records(data)) {
    ReliabilityDiagram d = reliability_curve(r, opt.bins);
    if (opt.resamples > 0) d.band = consistency_band(r.forecasts, opt.level, opt.resamples, opt.seed, opt.threads);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<RocCurve> roc_all(const Options& opt, const Dataset& data) {
  std::vector<RocCurve> out;
  for (const auto& r : records(data)) out.push_back(opt.concave ? concave_roc(r) : roc_curve(r));
  return out;
}

SvgOptions svg_options(const Options& opt) {
  SvgOptions s;
  s.support_range = opt.support_range;
  return s;
}

void cmd_murphy(const Options& opt, std::istream& in, std::ostream& out) {
  const auto curves = murphy_all(load(opt, in));
  if (opt.format == "svg") return emit(opt, out, murphy_svg(curves, svg_options(opt)));
  if (opt.format == "csv") {
    std::string s = csv_line({"forecaster", "lo", "hi", "a", "b"});
    for (const auto& c : curves) {
      for (const auto& seg : c.segments) {
        s += csv_line({c.name, shortest(seg.lo), shortest(seg.hi), shortest(seg.a), shortest(seg.b)});
      }
    }
    return emit(opt, out, s);
  }
  emit(opt, out, dump({{"curves", curves}}));
}

void cmd_reliability(const Options& opt, std::istream& in, std::ostream& out) {
  const auto diagrams = reliability_all(opt, load(opt, in));
  if (opt.format == "svg") return emit(opt, out, reliability_svg(diagrams, svg_options(opt)));
  if (opt.format == "csv") {
    std::string s = csv_line({"forecaster", "forecast", "cep", "lower", "upper"});
    for (const auto& d : diagrams) {
      for (std::size_t k = 0; k < d.points.size(); ++k) {
        std::string lo = d.band ? shortest(d.band->lower[k]) : "NA";
        std::string hi = d.band ? shortest(d.band->upper[k]) : "NA";
        s += csv_line({d.name, shortest(d.points[k].forecast), shortest(d.points[k].cep), lo, hi});
      }
    }
    return emit(opt, out, s);
  }
  emit(opt, out, dump({{"diagrams", diagrams}}));
}

void cmd_roc(const Options& opt, std::istream& in, std::ostream& out) {
  const auto curves = roc_all(opt, load(opt, in));
  if (opt.format == "svg") return emit(opt, out, roc_svg(curves, svg_options(opt)));
  if (opt.format == "csv") {
    std::string s = csv_line({"forecaster", "threshold", "far", "hr"});
    for (const auto& c : curves) {
      for (std::size_t k = 0; k < c.vertices.size(); ++k) {
        s += csv_line({c.name, std::isinf(c.thresholds[k]) ? "-inf" : shortest(c.thresholds[k]),
                       shortest(c.vertices[k].far), shortest(c.vertices[k].hr)});
      }
    }
    return emit(opt, out, s);
  }
  emit(opt, out, dump({{"curves", curves}}));
}

void cmd_triptych(const Options& opt, std::istream& in, std::ostream& out) {
  const Dataset data = load(opt, in);
  const auto murphy = murphy_all(data);
  const auto rel = reliability_all(opt, data);
  const auto roc = roc_all(opt, data);
  const std::string svg = triptych_svg(murphy, rel, roc, svg_options(opt));
  const json j = {{"murphy", murphy}, {"reliability", rel}, {"roc", roc}};
  if (opt.out.empty()) {
    if (opt.format == "svg") {
      out << svg;
    } else {
      require_format(opt, {"json"});
      out << dump(j);
    }
    return;
  }
  const fs::path dir(opt.out);
  write_atomic(dir / "triptych.svg", svg);
  write_atomic(dir / "triptych.json", dump(j));
}

void cmd_mcbdsc(const Options& opt, std::istream& in, std::ostream& out) {
  const auto decomps = decompose_all(opt, load(opt, in));
  const McbDscPlot plot = mcb_dsc_plot(decomps);
  if (opt.format == "svg") return emit(opt, out, mcbdsc_svg(plot, svg_options(opt)));
  if (opt.format == "csv") {
    std::string s = csv_line({"forecaster", "mcb", "dsc", "mean", "margin"});
    for (const auto& p : plot.points) {
      s += csv_line({p.name, p.mcb.to_string(), shortest(p.dsc), p.mean.to_string(), p.margin ? "true" : "false"});
    }
    return emit(opt, out, s);
  }
  emit(opt, out, dump(plot));
}

void cmd_crossings(const Options& opt, std::istream& in, std::ostream& out) {
  require_format(opt, {"json", "csv"});
  if (opt.forecasters.size() != 2) throw UsageError("crossings needs exactly two forecasters (--cols A,B)");
  const Dataset data = load(opt, in);
  const CrossingReport report = crossing_report(data.record(opt.forecasters[0]), data.record(opt.forecasters[1]),
                                                opt.tol);
  if (opt.format == "csv") {
    const json j = report;
    std::string s = csv_line({"key", "value"});
    for (const auto& [k, v] : j.items()) {
      if (v.is_object()) {
        for (const auto& [k2, v2] : v.items()) s += csv_line({k + "." + k2, v2.is_string() ? v2.get<std::string>() : v2.dump()});
      } else {
        s += csv_line({k, v.is_string() ? v.get<std::string>() : v.dump()});
      }
    }
    return emit(opt, out, s);
  }
  emit(opt, out, dump(report));
}

void cmd_simulate(const Options& opt, std::ostream& out) {
  if (opt.format != "csv") throw UsageError("simulate writes csv");
  const Scenario scenario = parse_scenario(opt.scenario);
  const ScenarioSample s = sample_scenario(scenario, opt.n, opt.seed, opt.threads);
  std::ostringstream buf;
  write_csv(buf, s.dataset());
  emit(opt, out, buf.str());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Forecast evaluation: Murphy curves, CORP reliability diagrams, ROC curves, score decompositions"};
  app.name("triptych");
  app.require_subcommand(1, 1);
  Options opt;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", opt.input, "Input CSV (stdin when omitted)");
    sub->add_flag("--long", opt.long_format, "Input is long CSV: forecaster,forecast,outcome");
    sub->add_option("--forecasters,--cols", opt.forecasters, "Forecaster columns to use")
        ->delimiter(',')
        ->allow_extra_args(false);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out,-o", opt.out, "Output path");
    sub->add_option("--format", opt.format, "Output format (json, csv or svg)")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
  };
  auto add_band = [&](CLI::App* sub) {
    sub->add_option("--level", opt.level, "Consistency band level")->check(CLI::Range(0.0, 1.0));
    sub->add_option("--resamples", opt.resamples, "Band replicates (0 disables the band)");
    sub->add_option("--seed", opt.seed, "Random seed");
    sub->add_option("--bins", opt.bins, "Histogram bins")->check(CLI::PositiveNumber);
    sub->add_flag("--support-range", opt.support_range, "Restrict reliability x-range to the forecast support");
    sub->add_option("--threads", opt.threads, "Worker threads for resampling");
  };
  auto add_concave = [&](CLI::App* sub) {
    sub->add_flag("--concave,!--raw", opt.concave, "Concave (PAV) or raw ROC curves");
  };

  auto* decompose = app.add_subcommand("decompose", "CORP score decomposition per forecaster");
  add_input(decompose);
  add_output(decompose);
  decompose->add_option("--score", opt.scores, "Scoring rule")->expected(1);

  auto* scores = app.add_subcommand("scores", "Mean scores per forecaster");
  add_input(scores);
  add_output(scores);
  scores->add_option("--score", opt.scores, "Scoring rules, comma separated")->delimiter(',')->allow_extra_args(false);

  auto* murphy = app.add_subcommand("murphy", "Murphy curves");
  add_input(murphy);
  add_output(murphy);

  auto* reliability = app.add_subcommand("reliability", "CORP reliability diagrams");
  add_input(reliability);
  add_output(reliability);
  add_band(reliability);

  auto* roc = app.add_subcommand("roc", "ROC curves");
  add_input(roc);
  add_output(roc);
  add_concave(roc);

  auto* triptych = app.add_subcommand("triptych", "Murphy, reliability and ROC panels");
  add_input(triptych);
  add_output(triptych);
  add_band(triptych);
  add_concave(triptych);

  auto* mcbdsc = app.add_subcommand("mcbdsc", "MCB-DSC plot");
  add_input(mcbdsc);
  add_output(mcbdsc);
  mcbdsc->add_option("--score", opt.scores, "Scoring rule")->expected(1);

  auto* crossings = app.add_subcommand("crossings", "Crossing and dominance report for two forecasters");
  add_input(crossings);
  add_output(crossings);
  crossings->add_option("--tol", opt.tol, "Sign tolerance")->check(CLI::NonNegativeNumber);

  auto* simulate = app.add_subcommand("simulate", "Sample an idealized scenario as wide CSV");
  add_output(simulate);
  simulate->add_option("--scenario", opt.scenario, "A, B or C")->check(CLI::IsMember({"A", "B", "C", "a", "b", "c"}));
  simulate->add_option("--n", opt.n, "Sample size")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", opt.seed, "Random seed");
  simulate->add_option("--threads", opt.threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  if (opt.format.empty()) opt.format = app.got_subcommand(simulate) ? "csv" : "json";

  try {
    if (app.got_subcommand(decompose)) cmd_decompose(opt, in, out);
    if (app.got_subcommand(scores)) cmd_scores(opt, in, out);
    if (app.got_subcommand(murphy)) cmd_murphy(opt, in, out);
    if (app.got_subcommand(reliability)) cmd_reliability(opt, in, out);
    if (app.got_subcommand(roc)) cmd_roc(opt, in, out);
    if (app.got_subcommand(triptych)) cmd_triptych(opt, in, out);
    if (app.got_subcommand(mcbdsc)) cmd_mcbdsc(opt, in, out);
    if (app.got_subcommand(crossings)) cmd_crossings(opt, in, out);
    if (app.got_subcommand(simulate)) cmd_simulate(opt, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << "\n";
    return data;
  } catch (const fs::filesystem_error& e) {
    err << "data error: " << e.what() << "\n";
    return data;
  } catch (const DegenerateError& e) {
    err << "numeric error: " << e.what() << "\n";
    return numeric;
  } catch (const std::exception& e) {
    err << "numeric error: " << e.what() << "\n";
    return numeric;
  }
  return ok;
}

}  // namespace triptych::cli
