#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace triptych {

// Paired probability forecasts and binary outcomes for one forecaster.
struct ForecastRecord {
  std::vector<double> forecasts;
  std::vector<int> outcomes;
  std::string name;

  // Validates and returns a record; throws DataError on violated invariants.
  static ForecastRecord make(std::vector<double> forecasts, std::vector<int> outcomes,
                             std::string name = {});

  std::size_t size() const { return forecasts.size(); }
};

// Throws DataError unless sizes match, n >= 1, forecasts lie in [0,1] and
// outcomes are exactly 0 or 1.
void validate(const ForecastRecord& record);

struct ForecastColumn {
  std::string name;
  std::vector<std::optional<double>> values;  // nullopt marks a missing cell
};

// Shared outcomes with any number of aligned forecast columns.
class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<int> outcomes, std::vector<ForecastColumn> columns);

  const std::vector<int>& outcomes() const { return outcomes_; }
  const std::vector<ForecastColumn>& columns() const { return columns_; }
  std::size_t rows() const { return outcomes_.size(); }

  std::vector<std::string> column_names() const;
  const ForecastColumn& column(std::string_view name) const;
  bool has_missing() const;

  // The named column as a record. Throws DataError if the column has missing
  // cells; call complete_cases first.
  ForecastRecord record(std::string_view name) const;

  // Keeps only the named columns, in the given order.
  Dataset select(std::span<const std::string> names) const;

 private:
  std::vector<int> outcomes_;
  std::vector<ForecastColumn> columns_;
};

enum class CsvFormat { wide, long_ };

// Wide: header `y,<name1>,...`, outcome column first, one row per case.
// Long: header `forecaster,forecast,outcome`; the k-th row of each forecaster
// is case k. Empty cells and `NA` are missing forecasts.
Dataset parse_csv(std::istream& in, CsvFormat format = CsvFormat::wide);
Dataset parse_csv_text(std::string_view text, CsvFormat format = CsvFormat::wide);

// Rows with no missing cell, order preserved. Throws DataError if none remain.
Dataset complete_cases(const Dataset& data);

// Writes a wide CSV; values use shortest round-trip formatting.
void write_csv(std::ostream& out, const Dataset& data);

// Empirical CDF F and its left-continuous generalized inverse Q.
class EmpiricalDistribution {
 public:
  explicit EmpiricalDistribution(std::span<const double> values);

  const std::vector<double>& support() const { return support_; }
  std::size_t count() const { return n_; }

  // F(t) = #{v <= t} / n.
  double cdf(double t) const;
  // Q(alpha) = min{v : F(v) >= alpha} for alpha in (0,1]; Q(0) is min(support).
  double quantile(double alpha) const;

  // Integral of F over [0, t] for t in [0,1] (the forecast domain).
  double cdf_integral(double t) const;
  // Integral of Q over [0, c] for c in [0,1].
  double quantile_integral(double c) const;

 private:
  std::vector<double> support_;
  std::vector<std::size_t> cumulative_;  // #{v <= support_[k]}
  std::vector<double> cdf_values_;
  std::vector<double> sorted_;
  std::size_t n_ = 0;
};

EmpiricalDistribution empirical_distribution(std::span<const double> values);

struct ClassPriors {
  double pi0 = 0.0;
  double pi1 = 0.0;
  double r = 0.0;  // event frequency, equal to pi1
  std::size_t n0 = 0;
  std::size_t n1 = 0;
  bool degenerate = false;  // only one outcome class present
};

ClassPriors class_priors(std::span<const int> outcomes);

// Throws DegenerateError when the outcomes contain a single class.
void require_both_classes(std::span<const int> outcomes, std::string_view context);

}  // namespace triptych
