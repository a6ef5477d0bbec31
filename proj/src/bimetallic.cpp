#include "gresham/bimetallic.hpp"

#include <cmath>
#include <stdexcept>

namespace gresham {

TimeEvolutionSpec::TimeEvolutionSpec(double tau, double horizon, double step)
    : tau_(tau), horizon_(horizon), step_(step) {
  if (!std::isfinite(tau) || !(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  if (!std::isfinite(horizon) || !(horizon >= 0.0)) {
    throw std::invalid_argument("horizon must be non-negative");
  }
  if (!std::isfinite(step) || !(step > 0.0)) throw std::invalid_argument("invalid step");
  if (horizon > 0.0 && step > horizon) throw std::invalid_argument("step exceeds horizon");
}

double flow_value(const DemandSpec& d, double price_gap) {
  return -d.quantity() * d.elasticity() * price_gap;
}

double flow_quantity(const DemandSpec& d, double price_gap, double price) {
  if (!std::isfinite(price) || !(price > 0.0)) throw std::invalid_argument("invalid price");
  return flow_value(d, price_gap) / price;
}

FlowResult flow_from_ratios(const DemandSpec& d1, const DemandSpec& d2, const RatioPair& r,
                            const FrictionSpec& friction, std::optional<double> price1) {
  if (price1 && (!std::isfinite(*price1) || !(*price1 > 0.0))) {
    throw std::invalid_argument("invalid price");
  }
  FlowResult out;
  if (friction.suppresses(overvaluation(r))) return out;

  out.dQ1 = -d1.quantity() * d1.elasticity() * (1.0 - r.market() / r.country());
  out.dQ2 = -d2.quantity() * d2.elasticity() * (1.0 - r.country() / r.market());
  out.dM1 = out.dQ1 * price1.value_or(r.country());
  return out;
}

double implied_elasticity_ratio(double q1, double q2) {
  if (!(q1 > 0.0) || !(q2 > 0.0)) throw std::invalid_argument("quantities must be positive");
  return q2 / q1;
}

double conserving_elasticity_ratio(double q1, double q2, double market_ratio) {
  if (!(market_ratio > 0.0)) throw std::invalid_argument("market ratio must be positive");
  return implied_elasticity_ratio(q1, q2) / market_ratio;
}

double closed_form_at(double q0, double elasticity, const RatioPair& r, double tau, double t) {
  return q0 * std::exp(-elasticity * overvaluation(r) * t / tau);
}

double evolve_closed_form(double q0, double elasticity, const RatioPair& r,
                          const TimeEvolutionSpec& spec) {
  return closed_form_at(q0, elasticity, r, spec.tau(), spec.horizon());
}

std::vector<TrajectoryPoint> evolve_numeric(double q0, double elasticity, const RatioPair& r,
                                            const TimeEvolutionSpec& spec) {
  const double rate = -elasticity * overvaluation(r) / spec.tau();
  const double dt = spec.step();
  const double horizon = spec.horizon();

  // Treat horizon/dt within 1e-9 of an integer as exact so t = 5, dt = 1e-4
  // does not grow a spurious sliver step.
  const double ratio = horizon / dt;
  auto steps = static_cast<long long>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(steps)) > 1e-9 * std::max(1.0, ratio)) {
    steps = static_cast<long long>(std::ceil(ratio));
  }

  std::vector<TrajectoryPoint> traj;
  traj.reserve(static_cast<std::size_t>(steps) + 1);
  double q = q0;
  traj.push_back({0.0, q});
  for (long long k = 1; k <= steps; ++k) {
    const double h = (k == steps) ? horizon - static_cast<double>(k - 1) * dt : dt;
    q += h * rate * q;
    traj.push_back({k == steps ? horizon : static_cast<double>(k) * dt, q});
  }
  return traj;
}

}  // namespace gresham
