#include "hienet/geometry.hpp"

#include <cmath>

#include "hienet/errors.hpp"

namespace hienet {

FeatureMatrix one_hot_encode(const MolecularConfiguration& config, const SpeciesTable& species) {
    FeatureMatrix features;
    features.layer_index = 0;
    features.values = Matrix(config.size(), species.size());
    for (int i = 0; i < config.size(); ++i) {
        const int a = species.index_of(config.atomic_numbers[i]);
        if (a < 0)
            throw DataError("atomic number " + std::to_string(config.atomic_numbers[i]) +
                            " is not in the species table");
        features.values(i, a) = 1.0;
    }
    return features;
}

NeighborList build_neighbor_list(const MolecularConfiguration& config, double cutoff) {
    if (cutoff <= 0.0) throw DataError("neighbor list cutoff must be positive");

    // All-pairs scan; molecules here are small enough that cell lists would
    // only add bookkeeping.
    constexpr double coincident = 1e-10; // Bohr
    NeighborList list;
    list.cutoff = cutoff;
    const int n = config.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const Vec3& a = config.coordinates[i];
            const Vec3& b = config.coordinates[j];
            const double dx = a[0] - b[0];
            const double dy = a[1] - b[1];
            const double dz = a[2] - b[2];
            const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
            if (r < coincident)
                throw DataError("coincident atoms " + std::to_string(i) + " and " +
                                std::to_string(j) + " in configuration '" + config.id + "'");
            if (r < cutoff) {
                list.pairs.push_back({i, j, r});
                list.pairs.push_back({j, i, r});
            }
        }
    }
    return list;
}

} // namespace hienet
