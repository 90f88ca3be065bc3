#include "triptych/scoring.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "triptych/error.hpp"
#include "triptych/format.hpp"

namespace triptych {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double parse_param(std::string_view text, std::string_view rule) {
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("invalid parameter '" + std::string(text) + "' in score '" +
                                std::string(rule) + "'");
  }
  return v;
}

void check_forecast(double x, int y) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("forecast outside [0,1]");
  if (y != 0 && y != 1) throw std::invalid_argument("outcome not in {0,1}");
}

// Exponents (a, b) with h(θ) ~ θ^(a−1) near 0 and (1−θ)^(b−1) near 1.
std::pair<double, double> density_exponents(const ScoringRule& rule) {
  switch (rule.kind()) {
    case RuleKind::brier: return {1.0, 1.0};
    case RuleKind::log: return {0.0, 0.0};
    case RuleKind::beta: return {rule.alpha(), rule.beta_param()};
    default: throw std::invalid_argument("rule '" + rule.name() + "' has no mixing density");
  }
}

using Integrand = std::function<double(double)>;

double gauss_panels(const Integrand& f, double lo, double hi, int panels) {
  using Rule = boost::math::quadrature::gauss<double, 10>;
  double acc = 0.0;
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double a = lo + width * p;
    const double b = p + 1 == panels ? hi : a + width;
    acc += Rule::integrate(f, a, b);
  }
  return acc;
}

// ∫_a^b f(θ) dθ for 0 <= a < b <= 1/2, where f(θ) ~ θ^power near 0.
double integrate_near_zero(const Integrand& f, double a, double b, double power, int panels) {
  if (a > 0.0) {
    // θ = e^u
    auto g = [&](double u) {
      const double t = std::exp(u);
      return f(t) * t;
    };
    return gauss_panels(g, std::log(a), std::log(b), panels);
  }
  if (power <= -1.0) throw DegenerateError("mixture integral diverges at 0");
  // θ = b t^k with k chosen so the transformed integrand vanishes at t = 0.
  const double k = std::max(1.0, std::ceil(2.0 / (power + 1.0)));
  auto g = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double theta = b * std::pow(t, k);
    return f(theta) * b * k * std::pow(t, k - 1.0);
  };
  return gauss_panels(g, 0.0, 1.0, panels);
}

}  // namespace

double ExtendedReal::value() const { return infinite_ ? kInf : value_; }

double ExtendedReal::finite_value() const {
  if (infinite_) throw DegenerateError("value is infinite");
  return value_;
}

std::string ExtendedReal::to_string() const { return infinite_ ? "inf" : shortest(value_); }

ExtendedReal ExtendedReal::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return infinity();
  double v = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw std::invalid_argument("not an extended real: '" + std::string(text) + "'");
  }
  return ExtendedReal(v);
}

ExtendedReal operator+(ExtendedReal a, ExtendedReal b) {
  if (a.infinite_ || b.infinite_) return ExtendedReal::infinity();
  return ExtendedReal(a.value_ + b.value_);
}

ExtendedReal operator-(ExtendedReal a, ExtendedReal b) {
  if (b.infinite_) throw DegenerateError("subtraction of an infinite value");
  if (a.infinite_) return a;
  return ExtendedReal(a.value_ - b.value_);
}

ExtendedReal operator/(ExtendedReal a, double d) {
  if (a.infinite_) return a;
  return ExtendedReal(a.value_ / d);
}

bool operator==(ExtendedReal a, ExtendedReal b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.value_ == b.value_;
}

bool operator<(ExtendedReal a, ExtendedReal b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

ScoringRule ScoringRule::brier() { return ScoringRule{}; }

ScoringRule ScoringRule::log() {
  ScoringRule r;
  r.kind_ = RuleKind::log;
  return r;
}

ScoringRule ScoringRule::zero_one() {
  ScoringRule r;
  r.kind_ = RuleKind::zero_one;
  r.theta_ = 0.5;
  return r;
}

ScoringRule ScoringRule::elementary(double theta) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("elementary threshold outside (0,1)");
  ScoringRule r;
  r.kind_ = RuleKind::elementary;
  r.theta_ = theta;
  return r;
}

ScoringRule ScoringRule::beta(double alpha, double beta) {
  if (!(alpha > 0.0 && beta > 0.0 && std::isfinite(alpha) && std::isfinite(beta))) {
    throw std::invalid_argument("beta family parameters must be positive");
  }
  ScoringRule r;
  r.kind_ = RuleKind::beta;
  r.alpha_ = alpha;
  r.beta_ = beta;
  return r;
}

ScoringRule ScoringRule::parse(std::string_view name) {
  if (name == "brier") return brier();
  if (name == "log") return log();
  if (name == "misclass") return zero_one();
  if (name.starts_with("elementary:")) {
    return elementary(parse_param(name.substr(11), name));
  }
  if (name.starts_with("beta:")) {
    auto rest = name.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("score '" + std::string(name) + "' must be beta:<alpha>:<beta>");
    }
    return beta(parse_param(rest.substr(0, colon), name), parse_param(rest.substr(colon + 1), name));
  }
  throw std::invalid_argument("unknown score '" + std::string(name) + "'");
}

std::string ScoringRule::name() const {
  switch (kind_) {
    case RuleKind::brier: return "brier";
    case RuleKind::log: return "log";
    case RuleKind::zero_one: return "misclass";
    case RuleKind::elementary: return "elementary:" + shortest(theta_);
    case RuleKind::beta: return "beta:" + shortest(alpha_) + ":" + shortest(beta_);
  }
  return {};
}

bool ScoringRule::has_savage() const { return kind_ != RuleKind::beta; }

bool ScoringRule::has_density() const { return !is_point_mass(); }

double ScoringRule::phi(double t) const {
  switch (kind_) {
    case RuleKind::brier: return t * t;
    case RuleKind::log: {
      const double a = t > 0.0 ? t * std::log(t) : 0.0;
      const double b = t < 1.0 ? (1.0 - t) * std::log1p(-t) : 0.0;
      return a + b;
    }
    case RuleKind::zero_one:
    case RuleKind::elementary:
      return 2.0 * std::max((1.0 - theta_) * t, theta_ * (1.0 - t));
    case RuleKind::beta: break;
  }
  throw std::invalid_argument("rule '" + name() + "' has no Savage representation");
}

double ScoringRule::phi_prime(double t) const {
  switch (kind_) {
    case RuleKind::brier: return 2.0 * t;
    case RuleKind::log:
      if (t <= 0.0) return -kInf;
      if (t >= 1.0) return kInf;
      return std::log(t) - std::log1p(-t);
    case RuleKind::zero_one:
    case RuleKind::elementary:
      if (t > theta_) return 2.0 * (1.0 - theta_);
      if (t < theta_) return -2.0 * theta_;
      return 2.0 * (1.0 - 2.0 * theta_);
    case RuleKind::beta: break;
  }
  throw std::invalid_argument("rule '" + name() + "' has no Savage representation");
}

double ScoringRule::density(double theta) const {
  switch (kind_) {
    case RuleKind::brier: return 1.0;
    case RuleKind::log: return 1.0 / (2.0 * theta * (1.0 - theta));
    case RuleKind::beta: return std::pow(theta, alpha_ - 1.0) * std::pow(1.0 - theta, beta_ - 1.0);
    default: break;
  }
  throw std::invalid_argument("rule '" + name() + "' has no mixing density");
}

bool operator==(const ScoringRule& a, const ScoringRule& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case RuleKind::elementary: return a.theta_ == b.theta_;
    case RuleKind::beta: return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
    default: return true;
  }
}

double elementary_score(double theta, double x, int y) {
  if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("elementary threshold outside (0,1)");
  check_forecast(x, y);
  if (x == theta) return 2.0 * theta * (1.0 - theta);
  if (x > theta) return y == 0 ? 2.0 * theta : 0.0;
  return y == 1 ? 2.0 * (1.0 - theta) : 0.0;
}

ExtendedReal score(const ScoringRule& rule, double x, int y) {
  check_forecast(x, y);
  switch (rule.kind()) {
    case RuleKind::brier: {
      const double d = x - y;
      return d * d;
    }
    case RuleKind::log:
      if (y == 1) return x == 0.0 ? ExtendedReal::infinity() : ExtendedReal(-std::log(x));
      return x == 1.0 ? ExtendedReal::infinity() : ExtendedReal(-std::log1p(-x));
    case RuleKind::zero_one:
      if (x == 0.5) return 0.5;
      if (x > 0.5) return y == 0 ? 1.0 : 0.0;
      return y == 1 ? 1.0 : 0.0;
    case RuleKind::elementary: return elementary_score(rule.theta(), x, y);
    case RuleKind::beta: {
      const double a = rule.alpha();
      const double b = rule.beta_param();
      // y = 1: 2 ∫_x^1 θ^(a−1)(1−θ)^b dθ;  y = 0: 2 ∫_0^x θ^a (1−θ)^(b−1) dθ
      if (y == 1) return 2.0 * boost::math::betac(a, b + 1.0, x);
      return 2.0 * boost::math::beta(a + 1.0, b, x);
    }
  }
  return 0.0;
}

ExtendedReal mean_score(const ScoringRule& rule, const ForecastRecord& record) {
  validate(record);
  double acc = 0.0;
  for (std::size_t i = 0; i < record.size(); ++i) {
    auto s = score(rule, record.forecasts[i], record.outcomes[i]);
    if (s.is_infinite()) return ExtendedReal::infinity();
    acc += s.value();
  }
  return acc / static_cast<double>(record.size());
}

ExtendedReal savage_score(const ScoringRule& rule, double x, int y) {
  check_forecast(x, y);
  if (!rule.has_savage()) {
    throw std::invalid_argument("rule '" + rule.name() + "' has no Savage representation");
  }
  if (rule.kind() == RuleKind::log && (x == 0.0 || x == 1.0)) {
    // φ′ is infinite here; the limit is 0 when the outcome matches, else +∞.
    return static_cast<double>(y) == x ? ExtendedReal(0.0) : ExtendedReal::infinity();
  }
  const double yy = static_cast<double>(y);
  return rule.phi(yy) - rule.phi(x) - rule.phi_prime(x) * (yy - x);
}

double mixture_score(const ScoringRule& rule, double x, int y, int nodes) {
  check_forecast(x, y);
  if (nodes < 10) throw std::invalid_argument("mixture quadrature needs at least 10 nodes");
  const auto [a0, b0] = density_exponents(rule);

  // Integrand is S_θ(x,y) h(θ): 2(1−θ)h on (x,1) for y = 1 and 2θh on (0,x) for y = 0.
  Integrand f = [&rule, y](double theta) {
    const double h = rule.density(theta);
    return y == 1 ? 2.0 * (1.0 - theta) * h : 2.0 * theta * h;
  };
  const double lo = y == 1 ? x : 0.0;
  const double hi = y == 1 ? 1.0 : x;
  if (hi <= lo) return 0.0;
  // Behaviour of the integrand near each end of the unit interval.
  const double power_at_zero = y == 1 ? a0 - 1.0 : a0;
  const double power_at_one = y == 1 ? b0 : b0 - 1.0;

  std::vector<std::pair<double, double>> pieces;
  if (lo < 0.5 && hi > 0.5) {
    pieces = {{lo, 0.5}, {0.5, hi}};
  } else {
    pieces = {{lo, hi}};
  }
  const int panels = std::max(1, nodes / (10 * static_cast<int>(pieces.size())));
  double total = 0.0;
  for (auto [a, b] : pieces) {
    if (b <= 0.5) {
      total += integrate_near_zero(f, a, b, power_at_zero, panels);
    } else {
      // reflect θ ↦ 1 − θ so the endpoint at 1 becomes the endpoint at 0
      Integrand g = [&f](double u) { return f(1.0 - u); };
      total += integrate_near_zero(g, 1.0 - b, 1.0 - a, power_at_one, panels);
    }
  }
  return total;
}

}  // namespace triptych
