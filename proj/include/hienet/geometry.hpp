#pragma once

#include <vector>

#include "hienet/matrix.hpp"
#include "hienet/types.hpp"

namespace hienet {

// Directed pair list: for every unordered pair within the cutoff, both (i,j)
// and (j,i) are present. Distances are Euclidean, in Bohr.
struct NeighborPair {
    int i = 0;
    int j = 0;
    double r = 0.0;
};

struct NeighborList {
    std::vector<NeighborPair> pairs;
    double cutoff = 0.0;
};

// Per-atom feature rows; layer_index 0 is the one-hot input.
struct FeatureMatrix {
    Matrix values;
    int layer_index = 0;
};

// One-hot species encoding: row i has a single 1 at the species-table index
// of atom i. Throws DataError on species outside the table.
FeatureMatrix one_hot_encode(const MolecularConfiguration& config, const SpeciesTable& species);

// All-pairs search; exactly the directed pairs with 0 < r < cutoff.
// Coincident atoms (r ~ 0) are a hard error: they indicate corrupt input and
// would make the inverse-distance sensitivities singular.
NeighborList build_neighbor_list(const MolecularConfiguration& config, double cutoff);

} // namespace hienet
