#include "hienet/types.hpp"

#include <algorithm>
#include <unordered_map>

#include "hienet/errors.hpp"

namespace hienet {

namespace {

constexpr const char* kSymbols[] = {
    "H",  "He", "Li", "Be", "B",  "C",  "N",  "O",  "F",  "Ne", "Na", "Mg", "Al", "Si",
    "P",  "S",  "Cl", "Ar", "K",  "Ca", "Sc", "Ti", "V",  "Cr", "Mn", "Fe", "Co", "Ni",
    "Cu", "Zn", "Ga", "Ge", "As", "Se", "Br", "Kr", "Rb", "Sr", "Y",  "Zr", "Nb", "Mo",
    "Tc", "Ru", "Rh", "Pd", "Ag", "Cd", "In", "Sn", "Sb", "Te", "I",  "Xe"};

constexpr int kMaxZ = static_cast<int>(sizeof(kSymbols) / sizeof(kSymbols[0]));

} // namespace

int atomic_number_of(const std::string& symbol) {
    static const std::unordered_map<std::string, int> lookup = [] {
        std::unordered_map<std::string, int> m;
        for (int z = 1; z <= kMaxZ; ++z) m.emplace(kSymbols[z - 1], z);
        return m;
    }();
    auto it = lookup.find(symbol);
    return it == lookup.end() ? 0 : it->second;
}

const char* element_symbol(int atomic_number) {
    if (atomic_number < 1 || atomic_number > kMaxZ) return nullptr;
    return kSymbols[atomic_number - 1];
}

SpeciesTable::SpeciesTable(std::vector<int> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw DataError("species table must not be empty");
    for (int z : entries_) {
        if (z <= 0) throw DataError("species table entries must be positive atomic numbers");
    }
    auto sorted = entries_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw DataError("species table entries must be distinct");
}

int SpeciesTable::index_of(int atomic_number) const {
    for (std::size_t a = 0; a < entries_.size(); ++a)
        if (entries_[a] == atomic_number) return static_cast<int>(a);
    return -1;
}

} // namespace hienet
