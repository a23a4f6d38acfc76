#pragma once

// Energy, data and time deltas converted to gCO2e. Every function is linear in
// its measured argument and sign-preserving: a negative delta (condition B
// costs more) flows through unchanged.

#include "fubench/model.hpp"

namespace fubench::emissions {

/// Grid emission factor in gCO2e per joule.
double c_elec(const EmissionFactors& f);

/// Use-phase user-device emissions (g) for an energy delta in joules.
double user_use_emissions(double delta_energy_j, const EmissionFactors& f);

/// Carbon cost of moving one megabyte across the network, in µgCO2e/MB.
/// The transfer electricity intensity halves every halving_period_years after
/// base_year. Throws std::domain_error if assessment_year < base_year.
double transfer_intensity(const EmissionFactors& f);

/// Use-phase network emissions (g) for a data delta in megabytes.
double network_use_emissions(double delta_data_mb, const EmissionFactors& f);

/// Embodied user-device emissions (g), allocated by execution-time share of
/// the device lifetime.
double user_embodied_emissions(double delta_t_s, const EmissionFactors& f);

/// Embodied network emissions (g) as a fixed ratio of network use-phase emissions.
double network_embodied_emissions(double delta_u_network_g, const EmissionFactors& f);

struct UnitDelta {
  double energy_j = 0.0;
  double data_mb = 0.0;
  double duration_s = 0.0;
};

EmissionComponents emission_breakdown(const UnitDelta& delta, const EmissionFactors& f);

}  // namespace fubench::emissions
