#include "fubench/emissions.hpp"

#include <cmath>
#include <stdexcept>

namespace fubench::emissions {

double c_elec(const EmissionFactors& f) { return f.grid_intensity * f.joule_to_kwh; }

double user_use_emissions(double delta_energy_j, const EmissionFactors& f) {
  return delta_energy_j * c_elec(f);
}

double transfer_intensity(const EmissionFactors& f) {
  if (f.assessment_year < f.base_year)
    throw std::domain_error("assessment_year " + std::to_string(f.assessment_year) +
                            " precedes base_year " + std::to_string(f.base_year));
  const double years = static_cast<double>(f.assessment_year - f.base_year);
  const double kwh_per_mb = f.transfer_intensity_base * 1e-3 * std::exp2(-years / f.halving_period_years);
  return kwh_per_mb * f.grid_intensity * 1e6;
}

double network_use_emissions(double delta_data_mb, const EmissionFactors& f) {
  return delta_data_mb * transfer_intensity(f) * 1e-6;
}

double user_embodied_emissions(double delta_t_s, const EmissionFactors& f) {
  return f.device_embodied_total * (delta_t_s / f.device_lifetime_seconds) * f.resource_share;
}

double network_embodied_emissions(double delta_u_network_g, const EmissionFactors& f) {
  return f.embodied_to_use_ratio * delta_u_network_g;
}

EmissionComponents emission_breakdown(const UnitDelta& delta, const EmissionFactors& f) {
  const double use_net = network_use_emissions(delta.data_mb, f);
  return EmissionComponents::from_parts(user_use_emissions(delta.energy_j, f), use_net,
                                        user_embodied_emissions(delta.duration_s, f),
                                        network_embodied_emissions(use_net, f));
}

}  // namespace fubench::emissions
