#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hienet/types.hpp"

namespace hienet {

// Extended-XYZ ingestion. A file is a concatenation of frames:
//
//   <atom count>
//   <comment line with key=value tokens>
//   <symbol> <x> <y> <z> [extra columns ignored]
//   ...
//
// Coordinates are Angstrom unless the comment line carries coord_unit=bohr.
// The reference energy, when present, is read from `energy_key` and is in
// Hartree unless energy_unit=kcal_per_mol is declared. Everything is
// converted to Bohr / kcal/mol at parse time.
struct XyzParseOptions {
    std::string energy_key = "energy";
    std::string id_key = "id";
};

std::vector<MolecularConfiguration> parse_extended_xyz(std::string_view text,
                                                       const SpeciesTable& species,
                                                       const XyzParseOptions& options = {});

std::vector<MolecularConfiguration> parse_extended_xyz_file(const std::string& path,
                                                            const SpeciesTable& species,
                                                            const XyzParseOptions& options = {});

// Serializes frames in the grammar above: Angstrom coordinates with 10
// decimals, energies in kcal/mol (declared via energy_unit=kcal_per_mol).
std::string to_extended_xyz(const std::vector<MolecularConfiguration>& configs);

} // namespace hienet
