#pragma once

#include <optional>
#include <string>

#include "hienet/params.hpp"
#include "hienet/trainer.hpp"

namespace hienet {

// Self-contained model container: hyperparameters (including the species
// table), every tensor at full double precision (base64-coded raw bytes, so
// round trips are bit-exact), the frozen sigma_E, and optionally the Adam
// state and an epoch cursor. Stored as JSON with a CRC32 over the canonical
// payload; the checksum is verified before anything is reconstructed.
struct Checkpoint {
    static constexpr int current_version = 1;

    int format_version = current_version;
    ModelParameters params;
    std::optional<AdamState> optimizer;
    std::optional<int> epoch;
};

void save_checkpoint(const Checkpoint& checkpoint, const std::string& path);
Checkpoint load_checkpoint(const std::string& path);

} // namespace hienet
