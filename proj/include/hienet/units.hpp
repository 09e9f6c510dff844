#pragma once

namespace hienet::units {

// All internal math runs in Bohr and kcal/mol; conversions happen once at
// ingestion and once at serialization.
inline constexpr double angstrom_to_bohr = 1.8897259886;
inline constexpr double bohr_to_angstrom = 1.0 / angstrom_to_bohr;
inline constexpr double hartree_to_kcal = 627.509474;
inline constexpr double kcal_to_hartree = 1.0 / hartree_to_kcal;

} // namespace hienet::units
