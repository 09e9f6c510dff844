#pragma once

#include "hienet/types.hpp"

namespace hienet {

// Architecture hyperparameters. Defaults are the reference configuration:
// two interaction blocks of (1 interaction + n_onsite on-site) layers, a
// constant feature width above the one-hot input, and 20 inverse-distance
// sensitivity functions spanning 1.7..10 Bohr under a 15 Bohr cutoff.
struct HyperParameters {
    int n_interaction = 2;  // interaction blocks == highest energy order
    int n_onsite = 3;       // on-site layers per block
    int n_feature = 80;     // feature width for every layer above the input
    int n_sensitivity = 20; // sensitivity functions per interaction layer
    double r_low = 1.7;     // Bohr, shortest sensitivity center
    double r_high = 10.0;   // Bohr, longest sensitivity center
    double r_cut = 15.0;    // Bohr, hard interaction cutoff
    SpeciesTable species;

    // Throws DataError when a field is out of range (counts < 1, n_onsite < 0,
    // or the radii not ordered 0 < r_low < r_high < r_cut).
    void validate() const;

    bool operator==(const HyperParameters&) const = default;
};

} // namespace hienet
