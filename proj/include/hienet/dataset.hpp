#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hienet/types.hpp"

namespace hienet {

// Uniformly random disjoint split drawn by Fisher-Yates on a mt19937_64
// stream seeded with `seed`; a pure function of (data order, sizes, seed).
// Everything not assigned to train or validate lands in test.
DatasetSplit split_dataset(const std::vector<MolecularConfiguration>& data,
                           std::size_t n_train,
                           std::size_t n_validate,
                           std::uint64_t seed);

// Population standard deviation of the reference energies, kcal/mol.
// Throws DataError if any configuration lacks an energy.
double energy_stddev(const std::vector<MolecularConfiguration>& data);

struct ExclusionResult {
    std::vector<MolecularConfiguration> kept;
    std::size_t removed = 0;
    std::size_t unmatched = 0; // exclusion ids that matched nothing
};

// Drops every configuration whose id appears in `exclusions`. Unknown ids
// are counted in `unmatched` so the caller can warn.
ExclusionResult apply_exclusion_list(std::vector<MolecularConfiguration> data,
                                     const std::vector<std::string>& exclusions);

// One identifier per line; '#' starts a comment, blank lines are skipped.
std::vector<std::string> load_exclusion_list(const std::string& path);

// Key-value manifest emitted next to every split for provenance.
void write_dataset_manifest(const std::string& path,
                            const std::vector<std::pair<std::string, std::string>>& entries);

} // namespace hienet
