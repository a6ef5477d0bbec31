#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace gresham {

/// Index of a currency inside a world. 0 is the highest-valued currency and
/// n-1 the lowest; user-facing output uses label() (1-based).
struct CurrencyId {
  std::size_t index = 0;

  constexpr std::size_t label() const { return index + 1; }
  friend constexpr auto operator<=>(CurrencyId, CurrencyId) = default;
};

enum class ScheduleViolation {
  kTooFewCurrencies,
  kNonFinite,
  kNonPositive,
  kNotStrictlyDecreasing,
  kLowestNotOne,
};

std::string describe(ScheduleViolation v);

/// Returns every violated invariant; an empty result means the values form a
/// valid schedule. Total over all inputs, including NaN and infinities.
std::vector<ScheduleViolation> validate_schedule(std::span<const double> values);

/// One country's face values for all currencies: positive, strictly
/// decreasing in currency index, lowest currency normalized to exactly 1.
class PriceSchedule {
 public:
  /// Throws std::invalid_argument naming each violation.
  explicit PriceSchedule(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double operator[](CurrencyId c) const { return values_.at(c.index); }
  std::span<const double> values() const { return values_; }

  friend bool operator==(const PriceSchedule&, const PriceSchedule&) = default;

 private:
  std::vector<double> values_;
};

/// Market ratio R and in-country ratio R_c for one currency pair.
class RatioPair {
 public:
  RatioPair(double market, double country);

  double market() const { return market_; }
  double country() const { return country_; }

 private:
  double market_;
  double country_;
};

/// Quantity demanded Q (weight units) and demand elasticity E_d (< 0) of an
/// arbitrage opportunity.
class DemandSpec {
 public:
  DemandSpec(double quantity, double elasticity);

  double quantity() const { return quantity_; }
  double elasticity() const { return elasticity_; }

 private:
  double quantity_;
  double elasticity_;
};

/// Dead band on relative overvaluation; flows with |overvaluation| <= threshold
/// are suppressed.
class FrictionSpec {
 public:
  FrictionSpec() = default;
  explicit FrictionSpec(double threshold);

  double threshold() const { return threshold_; }
  bool suppresses(double overvaluation) const;

 private:
  double threshold_ = 0.0;
};

/// values[i] / values[j]. Throws on i == j ("degenerate pair").
double country_ratio(const PriceSchedule& s, CurrencyId i, CurrencyId j);

/// 1 - R/R_c; positive iff the numerator currency is overvalued in-country.
double overvaluation(const RatioPair& r);

}  // namespace gresham
