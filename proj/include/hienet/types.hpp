#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hienet {

using Vec3 = std::array<double, 3>;

// Ordered list of atomic numbers the model can represent. The order is part
// of the model definition: feature column a of the one-hot input corresponds
// to entries()[a] for the lifetime of the model.
class SpeciesTable {
public:
    // H, C, N, O, F — the organic set used throughout.
    SpeciesTable() : SpeciesTable(std::vector<int>{1, 6, 7, 8, 9}) {}
    explicit SpeciesTable(std::vector<int> entries);

    int index_of(int atomic_number) const; // -1 when absent
    bool contains(int atomic_number) const { return index_of(atomic_number) >= 0; }
    int size() const { return static_cast<int>(entries_.size()); }
    const std::vector<int>& entries() const { return entries_; }

    bool operator==(const SpeciesTable&) const = default;

private:
    std::vector<int> entries_;
};

// One molecule: atomic numbers plus coordinates in Bohr, with an optional
// reference energy in kcal/mol. The identifier is opaque and only used for
// split bookkeeping and exclusion lists.
struct MolecularConfiguration {
    std::vector<int> atomic_numbers;
    std::vector<Vec3> coordinates; // Bohr
    std::optional<double> energy;  // kcal/mol
    std::string id;

    int size() const { return static_cast<int>(atomic_numbers.size()); }
};

// Disjoint train/validate/test partition; test holds everything not assigned
// to the first two lists.
struct DatasetSplit {
    std::vector<MolecularConfiguration> train;
    std::vector<MolecularConfiguration> validate;
    std::vector<MolecularConfiguration> test;
    std::uint64_t seed = 0;
};

// Element symbol <-> atomic number for H..Xe, enough for the datasets this
// code targets. Lookups are case-sensitive on the conventional capitalization.
int atomic_number_of(const std::string& symbol); // 0 when unknown
const char* element_symbol(int atomic_number);   // nullptr when out of range

} // namespace hienet
