#pragma once

#include "gresham/economy.hpp"

namespace gresham {

/// Parameters of charged-particle drift between two electrodes.
class DriftParams {
 public:
  DriftParams(double charge, double density, double mobility, double field, double voltage,
              double gap);

  double charge() const { return charge_; }
  double density() const { return density_; }
  double mobility() const { return mobility_; }
  double field() const { return field_; }
  double voltage() const { return voltage_; }
  double gap() const { return gap_; }

  DriftParams with_charge(double v) const;
  DriftParams with_density(double v) const;
  DriftParams with_mobility(double v) const;
  DriftParams with_field(double v) const;
  DriftParams with_voltage(double v) const;
  DriftParams with_gap(double v) const;

 private:
  double charge_;
  double density_;
  double mobility_;
  double field_;
  double voltage_;
  double gap_;
};

/// J = q n mu E.
double drift_current_field(const DriftParams& p);

/// J = q n mu dV / d; identical to the field form evaluated at E = dV / d.
double drift_current_voltage(const DriftParams& p);

/// Labeled correspondence between an arbitrage flow and a drift current:
/// q*n <-> Q, mu <-> |E_d|, dV <-> dP. Not a unit conversion; `current` is the
/// flow value -Q E_d dP.
struct DriftCorrespondence {
  double qn = 0.0;
  double mu = 0.0;
  double dV = 0.0;
  double current = 0.0;
};

DriftCorrespondence gresham_to_drift(const DemandSpec& d, double price_gap);

}  // namespace gresham
