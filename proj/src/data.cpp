#include "triptych/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "triptych/error.hpp"
#include "triptych/format.hpp"

namespace triptych {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Splits one CSV line; double quotes may wrap a field and "" escapes a quote.
std::vector<std::string> split_fields(std::string_view line, std::size_t line_no) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw DataError("line " + std::to_string(line_no) + ": unterminated quote");
  fields.emplace_back(trim(cur));
  return fields;
}

bool is_missing(std::string_view cell) { return cell.empty() || cell == "NA"; }

double parse_number(std::string_view cell, std::size_t line_no, std::string_view what) {
  double v = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  auto res = std::from_chars(first, last, v);
  if (res.ec != std::errc() || res.ptr != last || !std::isfinite(v)) {
    throw DataError("line " + std::to_string(line_no) + ": malformed " + std::string(what) +
                    " '" + std::string(cell) + "'");
  }
  return v;
}

std::optional<double> parse_forecast(std::string_view cell, std::size_t line_no) {
  if (is_missing(cell)) return std::nullopt;
  double v = parse_number(cell, line_no, "forecast");
  if (v < 0.0 || v > 1.0) {
    throw DataError("line " + std::to_string(line_no) + ": forecast out of range [0,1]: " +
                    std::string(cell));
  }
  return v;
}

int parse_outcome(std::string_view cell, std::size_t line_no) {
  if (is_missing(cell)) throw DataError("line " + std::to_string(line_no) + ": missing outcome");
  double v = parse_number(cell, line_no, "outcome");
  if (v != 0.0 && v != 1.0) {
    throw DataError("line " + std::to_string(line_no) + ": outcome not in {0,1}: " +
                    std::string(cell));
  }
  return v == 1.0 ? 1 : 0;
}

struct Lines {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::vector<std::string> header;
};

Lines read_lines(std::istream& in) {
  Lines out;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (line_no == 1 && view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
    if (trim(view).empty()) continue;
    auto fields = split_fields(view, line_no);
    if (!have_header) {
      out.header = std::move(fields);
      have_header = true;
    } else {
      out.rows.emplace_back(line_no, std::move(fields));
    }
  }
  if (!have_header) throw DataError("empty file");
  return out;
}

Dataset parse_wide(const Lines& lines) {
  const auto& header = lines.header;
  if (header.size() < 2) throw DataError("header must be `y,<name>,...`");
  std::vector<ForecastColumn> columns(header.size() - 1);
  for (std::size_t j = 1; j < header.size(); ++j) {
    if (header[j].empty()) throw DataError("empty forecaster name in header");
    columns[j - 1].name = header[j];
  }
  std::vector<int> outcomes;
  outcomes.reserve(lines.rows.size());
  for (const auto& [line_no, fields] : lines.rows) {
    if (fields.size() != header.size()) {
      throw DataError("line " + std::to_string(line_no) + ": malformed row, expected " +
                      std::to_string(header.size()) + " fields, got " +
                      std::to_string(fields.size()));
    }
    outcomes.push_back(parse_outcome(fields[0], line_no));
    for (std::size_t j = 1; j < fields.size(); ++j) {
      columns[j - 1].values.push_back(parse_forecast(fields[j], line_no));
    }
  }
  if (outcomes.empty()) throw DataError("empty file: no data rows");
  return Dataset(std::move(outcomes), std::move(columns));
}

Dataset parse_long(const Lines& lines) {
  const auto& header = lines.header;
  if (header.size() != 3 || header[0] != "forecaster" || header[1] != "forecast" ||
      header[2] != "outcome") {
    throw DataError("long format header must be `forecaster,forecast,outcome`");
  }
  std::vector<std::string> order;
  std::map<std::string, std::vector<std::pair<std::optional<double>, int>>> by_name;
  for (const auto& [line_no, fields] : lines.rows) {
    if (fields.size() != 3) {
      throw DataError("line " + std::to_string(line_no) + ": malformed row, expected 3 fields");
    }
    if (fields[0].empty()) throw DataError("line " + std::to_string(line_no) + ": empty forecaster");
    auto [it, inserted] = by_name.try_emplace(fields[0]);
    if (inserted) order.push_back(fields[0]);
    it->second.emplace_back(parse_forecast(fields[1], line_no), parse_outcome(fields[2], line_no));
  }
  if (order.empty()) throw DataError("empty file: no data rows");

  const auto& first = by_name.at(order.front());
  std::vector<int> outcomes;
  for (const auto& cell : first) outcomes.push_back(cell.second);

  std::vector<ForecastColumn> columns;
  for (const auto& name : order) {
    const auto& cells = by_name.at(name);
    if (cells.size() != outcomes.size()) {
      throw DataError("forecaster '" + name + "' has " + std::to_string(cells.size()) +
                      " cases, expected " + std::to_string(outcomes.size()));
    }
    ForecastColumn col{name, {}};
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].second != outcomes[i]) {
        throw DataError("forecaster '" + name + "' disagrees on the outcome of case " +
                        std::to_string(i + 1));
      }
      col.values.push_back(cells[i].first);
    }
    columns.push_back(std::move(col));
  }
  return Dataset(std::move(outcomes), std::move(columns));
}

}  // namespace

ForecastRecord ForecastRecord::make(std::vector<double> forecasts, std::vector<int> outcomes,
                                    std::string name) {
  ForecastRecord rec{std::move(forecasts), std::move(outcomes), std::move(name)};
  validate(rec);
  return rec;
}

void validate(const ForecastRecord& record) {
  if (record.forecasts.size() != record.outcomes.size()) {
    throw DataError("forecasts and outcomes differ in length");
  }
  if (record.forecasts.empty()) throw DataError("record is empty");
  for (double x : record.forecasts) {
    if (!(x >= 0.0 && x <= 1.0)) throw DataError("forecast out of range [0,1]");
  }
  for (int y : record.outcomes) {
    if (y != 0 && y != 1) throw DataError("outcome not in {0,1}");
  }
}

Dataset::Dataset(std::vector<int> outcomes, std::vector<ForecastColumn> columns)
    : outcomes_(std::move(outcomes)), columns_(std::move(columns)) {
  for (int y : outcomes_) {
    if (y != 0 && y != 1) throw DataError("outcome not in {0,1}");
  }
  for (const auto& col : columns_) {
    if (col.values.size() != outcomes_.size()) {
      throw DataError("column '" + col.name + "' length differs from outcomes");
    }
    for (const auto& v : col.values) {
      if (v && !(*v >= 0.0 && *v <= 1.0)) throw DataError("forecast out of range [0,1]");
    }
  }
}

std::vector<std::string> Dataset::column_names() const {
  std::vector<std::string> names;
  for (const auto& col : columns_) names.push_back(col.name);
  return names;
}

const ForecastColumn& Dataset::column(std::string_view name) const {
  auto it = std::find_if(columns_.begin(), columns_.end(),
                         [&](const ForecastColumn& c) { return c.name == name; });
  if (it == columns_.end()) throw DataError("no forecaster named '" + std::string(name) + "'");
  return *it;
}

bool Dataset::has_missing() const {
  return std::any_of(columns_.begin(), columns_.end(), [](const ForecastColumn& c) {
    return std::any_of(c.values.begin(), c.values.end(), [](const auto& v) { return !v; });
  });
}

ForecastRecord Dataset::record(std::string_view name) const {
  const auto& col = column(name);
  ForecastRecord rec;
  rec.name = col.name;
  rec.outcomes = outcomes_;
  rec.forecasts.reserve(col.values.size());
  for (const auto& v : col.values) {
    if (!v) throw DataError("forecaster '" + col.name + "' has missing values");
    rec.forecasts.push_back(*v);
  }
  validate(rec);
  return rec;
}

Dataset Dataset::select(std::span<const std::string> names) const {
  std::vector<ForecastColumn> cols;
  for (const auto& name : names) cols.push_back(column(name));
  return Dataset(outcomes_, std::move(cols));
}

Dataset parse_csv(std::istream& in, CsvFormat format) {
  auto lines = read_lines(in);
  return format == CsvFormat::wide ? parse_wide(lines) : parse_long(lines);
}

Dataset parse_csv_text(std::string_view text, CsvFormat format) {
  std::istringstream in{std::string(text)};
  return parse_csv(in, format);
}

Dataset complete_cases(const Dataset& data) {
  std::vector<int> outcomes;
  std::vector<ForecastColumn> columns;
  for (const auto& col : data.columns()) columns.push_back({col.name, {}});
  for (std::size_t i = 0; i < data.rows(); ++i) {
    bool complete = std::all_of(data.columns().begin(), data.columns().end(),
                                [i](const ForecastColumn& c) { return c.values[i].has_value(); });
    if (!complete) continue;
    outcomes.push_back(data.outcomes()[i]);
    for (std::size_t j = 0; j < columns.size(); ++j) {
      columns[j].values.push_back(data.columns()[j].values[i]);
    }
  }
  if (outcomes.empty()) throw DataError("no jointly complete rows");
  return Dataset(std::move(outcomes), std::move(columns));
}

void write_csv(std::ostream& out, const Dataset& data) {
  out << 'y';
  for (const auto& col : data.columns()) out << ',' << col.name;
  out << '\n';
  for (std::size_t i = 0; i < data.rows(); ++i) {
    out << data.outcomes()[i];
    for (const auto& col : data.columns()) {
      out << ',';
      if (col.values[i]) out << shortest(*col.values[i]);
    }
    out << '\n';
  }
}

EmpiricalDistribution::EmpiricalDistribution(std::span<const double> values)
    : sorted_(values.begin(), values.end()), n_(values.size()) {
  if (values.empty()) throw DataError("empirical distribution of an empty list");
  std::sort(sorted_.begin(), sorted_.end());
  for (std::size_t i = 0; i < n_; ++i) {
    if (support_.empty() || sorted_[i] != support_.back()) {
      support_.push_back(sorted_[i]);
      cumulative_.push_back(0);
    }
    cumulative_.back() = i + 1;
  }
  cdf_values_.reserve(support_.size());
  for (std::size_t c : cumulative_) {
    cdf_values_.push_back(static_cast<double>(c) / static_cast<double>(n_));
  }
}

double EmpiricalDistribution::cdf(double t) const {
  auto it = std::upper_bound(support_.begin(), support_.end(), t);
  if (it == support_.begin()) return 0.0;
  return cdf_values_[static_cast<std::size_t>(it - support_.begin()) - 1];
}

double EmpiricalDistribution::quantile(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("quantile level outside [0,1]");
  auto it = std::lower_bound(cdf_values_.begin(), cdf_values_.end(), alpha);
  if (it == cdf_values_.end()) return support_.back();
  return support_[static_cast<std::size_t>(it - cdf_values_.begin())];
}

double EmpiricalDistribution::cdf_integral(double t) const {
  // integral of F over [0,t] equals mean of (t - v)_+
  double acc = 0.0;
  for (double v : sorted_) {
    if (v > t) break;
    acc += t - v;
  }
  return acc / static_cast<double>(n_);
}

double EmpiricalDistribution::quantile_integral(double c) const {
  if (!(c >= 0.0 && c <= 1.0)) throw std::invalid_argument("quantile index outside [0,1]");
  const double scaled = c * static_cast<double>(n_);
  auto whole = static_cast<std::size_t>(std::floor(scaled + 1e-9));
  whole = std::min(whole, n_);
  double frac = std::max(0.0, scaled - static_cast<double>(whole));
  double acc = 0.0;
  for (std::size_t j = 0; j < whole; ++j) acc += sorted_[j];
  if (whole < n_) acc += frac * sorted_[whole];
  return acc / static_cast<double>(n_);
}

EmpiricalDistribution empirical_distribution(std::span<const double> values) {
  return EmpiricalDistribution(values);
}

ClassPriors class_priors(std::span<const int> outcomes) {
  if (outcomes.empty()) throw DataError("class priors of an empty outcome list");
  ClassPriors p;
  for (int y : outcomes) (y == 1 ? p.n1 : p.n0)++;
  const double n = static_cast<double>(outcomes.size());
  p.r = static_cast<double>(p.n1) / n;
  p.pi1 = p.r;
  p.pi0 = 1.0 - p.r;
  p.degenerate = p.n0 == 0 || p.n1 == 0;
  return p;
}

void require_both_classes(std::span<const int> outcomes, std::string_view context) {
  if (class_priors(outcomes).degenerate) {
    throw DegenerateError(std::string(context) + ": outcomes contain a single class");
  }
}

}  // namespace triptych
