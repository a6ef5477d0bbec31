#include "gresham/drift.hpp"

#include <cmath>
#include <stdexcept>

#include "gresham/bimetallic.hpp"

namespace gresham {

namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

}  // namespace

DriftParams::DriftParams(double charge, double density, double mobility, double field,
                         double voltage, double gap)
    : charge_(charge),
      density_(density),
      mobility_(mobility),
      field_(field),
      voltage_(voltage),
      gap_(gap) {
  require_positive(charge, "charge");
  require_positive(density, "density");
  require_positive(mobility, "mobility");
  if (!std::isfinite(field)) throw std::invalid_argument("field must be finite");
  if (!std::isfinite(voltage)) throw std::invalid_argument("voltage must be finite");
  if (!std::isfinite(gap) || !(gap > 0.0)) throw std::invalid_argument("invalid gap");
}

DriftParams DriftParams::with_charge(double v) const {
  return {v, density_, mobility_, field_, voltage_, gap_};
}
DriftParams DriftParams::with_density(double v) const {
  return {charge_, v, mobility_, field_, voltage_, gap_};
}
DriftParams DriftParams::with_mobility(double v) const {
  return {charge_, density_, v, field_, voltage_, gap_};
}
DriftParams DriftParams::with_field(double v) const {
  return {charge_, density_, mobility_, v, voltage_, gap_};
}
DriftParams DriftParams::with_voltage(double v) const {
  return {charge_, density_, mobility_, field_, v, gap_};
}
DriftParams DriftParams::with_gap(double v) const {
  return {charge_, density_, mobility_, field_, voltage_, v};
}

double drift_current_field(const DriftParams& p) {
  return p.charge() * p.density() * p.mobility() * p.field();
}

double drift_current_voltage(const DriftParams& p) {
  return drift_current_field(p.with_field(p.voltage() / p.gap()));
}

DriftCorrespondence gresham_to_drift(const DemandSpec& d, double price_gap) {
  return {d.quantity(), std::abs(d.elasticity()), price_gap, flow_value(d, price_gap)};
}

}  // namespace gresham
