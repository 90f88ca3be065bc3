#pragma once

#include <string>
#include <string_view>

#include "triptych/data.hpp"

namespace triptych {

// A real number or +infinity. Logarithmic scores are infinite when an outcome
// was forecast with probability zero.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  constexpr ExtendedReal(double v) : value_(v) {}  // NOLINT: implicit from finite values

  static constexpr ExtendedReal infinity() {
    ExtendedReal e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  // The finite value; +inf as a double when infinite.
  double value() const;
  // Finite value or throws DegenerateError.
  double finite_value() const;

  // "inf" or the shortest round-trip decimal.
  std::string to_string() const;
  static ExtendedReal parse(std::string_view text);

  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b);
  // Throws DegenerateError when b is infinite.
  friend ExtendedReal operator-(ExtendedReal a, ExtendedReal b);
  friend ExtendedReal operator/(ExtendedReal a, double d);
  friend bool operator==(ExtendedReal a, ExtendedReal b);
  friend bool operator<(ExtendedReal a, ExtendedReal b);

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

enum class RuleKind { brier, log, zero_one, elementary, beta };

// A proper scoring rule for binary outcomes, negatively oriented.
//
// Mixing densities h(θ) over elementary scores (as in S = ∫ S_θ dH):
//   Brier      h ≡ 1
//   Log        h(θ) = 1 / (2θ(1−θ))
//   Beta(α,β)  h(θ) = θ^(α−1) (1−θ)^(β−1), unnormalized, so Beta(1,1) is Brier
// Elementary and zero–one rules are point masses and have no density.
class ScoringRule {
 public:
  static ScoringRule brier();
  static ScoringRule log();
  static ScoringRule zero_one();
  static ScoringRule elementary(double theta);
  static ScoringRule beta(double alpha, double beta);

  // `brier`, `log`, `misclass`, `elementary:<theta>`, `beta:<alpha>:<beta>`.
  static ScoringRule parse(std::string_view name);

  RuleKind kind() const { return kind_; }
  // Threshold of an elementary rule (1/2 for zero–one).
  double theta() const { return theta_; }
  double alpha() const { return alpha_; }
  double beta_param() const { return beta_; }
  std::string name() const;

  bool has_savage() const;
  bool has_density() const;
  bool is_point_mass() const { return kind_ == RuleKind::elementary || kind_ == RuleKind::zero_one; }

  // Convex function of the Savage representation and its subgradient; the Log
  // subgradient is ±infinity at the endpoints. At the kink t = θ of an
  // elementary rule the subgradient is 2(1 − 2θ), the one value that yields
  // the tie penalty 2θ(1−θ) for both outcomes.
  double phi(double t) const;
  double phi_prime(double t) const;

  double density(double theta) const;

  friend bool operator==(const ScoringRule& a, const ScoringRule& b);

 private:
  RuleKind kind_ = RuleKind::brier;
  double theta_ = 0.5;
  double alpha_ = 1.0;
  double beta_ = 1.0;
};

// Elementary score with the symmetric tie penalty 2θ(1−θ) at x = θ.
double elementary_score(double theta, double x, int y);

ExtendedReal score(const ScoringRule& rule, double x, int y);

// Arithmetic mean over the record; +infinity if any row is infinite.
ExtendedReal mean_score(const ScoringRule& rule, const ForecastRecord& record);

// φ(y) − φ(x) − φ′(x)(y − x). Throws std::invalid_argument for rules
// without a Savage representation.
ExtendedReal savage_score(const ScoringRule& rule, double x, int y);

// Numerical quadrature of ∫ S_θ(x,y) h(θ) dθ. The range is split at x and at
// 1/2; pieces next to 0 or 1 use a power substitution and interior pieces a
// logarithmic one, which makes the Log integrand smooth. Throws
// DegenerateError when the integral diverges and std::invalid_argument for
// point-mass rules.
double mixture_score(const ScoringRule& rule, double x, int y, int nodes = 2000);

}  // namespace triptych
