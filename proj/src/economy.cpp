#include "gresham/economy.hpp"

#include <cmath>
#include <stdexcept>

namespace gresham {

std::string describe(ScheduleViolation v) {
  switch (v) {
    case ScheduleViolation::kTooFewCurrencies:
      return "fewer than two currencies";
    case ScheduleViolation::kNonFinite:
      return "non-finite value";
    case ScheduleViolation::kNonPositive:
      return "non-positive value";
    case ScheduleViolation::kNotStrictlyDecreasing:
      return "not strictly decreasing";
    case ScheduleViolation::kLowestNotOne:
      return "last value != 1";
  }
  return "unknown violation";
}

std::vector<ScheduleViolation> validate_schedule(std::span<const double> values) {
  std::vector<ScheduleViolation> out;
  if (values.size() < 2) out.push_back(ScheduleViolation::kTooFewCurrencies);

  bool non_finite = false;
  bool non_positive = false;
  for (double v : values) {
    if (!std::isfinite(v)) non_finite = true;
    // NaN fails both comparisons, so test the positive case explicitly.
    if (!(v > 0.0)) non_positive = true;
  }
  if (non_finite) out.push_back(ScheduleViolation::kNonFinite);
  if (non_positive) out.push_back(ScheduleViolation::kNonPositive);

  for (std::size_t k = 1; k < values.size(); ++k) {
    if (!(values[k - 1] > values[k])) {
      out.push_back(ScheduleViolation::kNotStrictlyDecreasing);
      break;
    }
  }
  if (!values.empty() && values.back() != 1.0) {
    out.push_back(ScheduleViolation::kLowestNotOne);
  }
  return out;
}

PriceSchedule::PriceSchedule(std::vector<double> values) : values_(std::move(values)) {
  const auto violations = validate_schedule(values_);
  if (!violations.empty()) {
    std::string msg = "invalid price schedule:";
    for (std::size_t k = 0; k < violations.size(); ++k) {
      msg += (k == 0 ? " " : "; ") + describe(violations[k]);
    }
    throw std::invalid_argument(msg);
  }
}

RatioPair::RatioPair(double market, double country) : market_(market), country_(country) {
  if (!std::isfinite(market) || !(market > 0.0)) {
    throw std::invalid_argument("market ratio must be positive and finite");
  }
  if (!std::isfinite(country) || !(country > 0.0)) {
    throw std::invalid_argument("country ratio must be positive and finite");
  }
}

DemandSpec::DemandSpec(double quantity, double elasticity)
    : quantity_(quantity), elasticity_(elasticity) {
  if (!std::isfinite(quantity) || !(quantity > 0.0)) {
    throw std::invalid_argument("quantity must be positive");
  }
  if (!std::isfinite(elasticity) || !(elasticity < 0.0)) {
    throw std::invalid_argument("elasticity must be negative");
  }
}

FrictionSpec::FrictionSpec(double threshold) : threshold_(threshold) {
  if (!(threshold >= 0.0 && threshold < 1.0)) {
    throw std::invalid_argument("friction threshold must lie in [0, 1)");
  }
}

bool FrictionSpec::suppresses(double overvaluation) const {
  return std::abs(overvaluation) <= threshold_;
}

double country_ratio(const PriceSchedule& s, CurrencyId i, CurrencyId j) {
  if (i == j) throw std::invalid_argument("degenerate pair");
  return s[i] / s[j];
}

double overvaluation(const RatioPair& r) { return 1.0 - r.market() / r.country(); }

}  // namespace gresham
