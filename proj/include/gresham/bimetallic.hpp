#pragma once

#include <optional>
#include <vector>

#include "gresham/economy.hpp"

namespace gresham {

/// Signed flows for a two-currency, two-country world. Positive means inflow
/// into the country. dM1 is the currency-1 flow expressed in account units; it
/// is unrelated to the M1 money-supply aggregate.
struct FlowResult {
  double dQ1 = 0.0;
  double dQ2 = 0.0;
  double dM1 = 0.0;
};

/// Demand-adjustment time constant tau, horizon t and integration step dt.
class TimeEvolutionSpec {
 public:
  TimeEvolutionSpec(double tau, double horizon, double step);

  double tau() const { return tau_; }
  double horizon() const { return horizon_; }
  double step() const { return step_; }

 private:
  double tau_;
  double horizon_;
  double step_;
};

struct TrajectoryPoint {
  double t = 0.0;
  double q = 0.0;
};

/// -Q * E_d * dP / P. Throws for P <= 0 ("invalid price").
double flow_quantity(const DemandSpec& d, double price_gap, double price);

/// -Q * E_d * dP, the same flow in account units.
double flow_value(const DemandSpec& d, double price_gap);

/// Flows of both species when the country's ratio R_c differs from the market
/// ratio R. `price1` is the currency-1 face value used for dM1; when absent
/// prices are normalized so that P2 = 1 and P1 = R_c. Flows inside the
/// friction dead band are exactly zero.
FlowResult flow_from_ratios(const DemandSpec& d1, const DemandSpec& d2, const RatioPair& r,
                            const FrictionSpec& friction = {},
                            std::optional<double> price1 = std::nullopt);

/// Q2/Q1, the elasticity ratio E1/E2 the value-conservation argument arrives
/// at when the market ratio is dropped.
double implied_elasticity_ratio(double q1, double q2);

/// Q2/(R*Q1): the E1/E2 that makes P1*dQ1 + P2*dQ2 vanish exactly.
double conserving_elasticity_ratio(double q1, double q2, double market_ratio);

/// Q0 * exp(-E_d * (1 - R/R_c) * t / tau) evaluated at spec.horizon().
double evolve_closed_form(double q0, double elasticity, const RatioPair& r,
                          const TimeEvolutionSpec& spec);

/// Closed form at an arbitrary time t.
double closed_form_at(double q0, double elasticity, const RatioPair& r, double tau, double t);

/// Explicit forward-Euler integration of dQ/dt = -(Q/tau) E_d (1 - R/R_c)
/// from 0 to spec.horizon(). The first point is (0, Q0); the last step is
/// shortened if dt does not divide the horizon.
std::vector<TrajectoryPoint> evolve_numeric(double q0, double elasticity, const RatioPair& r,
                                            const TimeEvolutionSpec& spec);

}  // namespace gresham
