#pragma once

#include <span>
#include <utility>

#include "hienet/loss.hpp"
#include "hienet/model.hpp"

namespace hienet {

struct LossConfig {
    double lambda_l2 = 1e-6;
    double lambda_r = 1e-2;
    double energy_std = 1.0; // frozen training-set sigma_E
};

// Reverse-mode pass over one cached forward evaluation. seed_energy is
// d loss / d E_total (identical for every per-atom, per-order term),
// seed_hier is d loss / d R. Gradients are accumulated into `grads` in a
// fixed order, so batch results are reproducible.
void backward(const ForwardCache& cache, const ModelParameters& params,
              double seed_energy, double seed_hier, GradientSet& grads);

// Loss and exact analytic gradients of the full training objective over a
// mini-batch. Throws NumericError naming the offending tensor if anything
// non-finite shows up in the forward or backward pass.
std::pair<LossBreakdown, GradientSet> loss_gradients(
    std::span<const MolecularConfiguration> batch,
    const ModelParameters& params,
    const LossConfig& config);

// The same objective without gradients; used by the finite-difference tests.
LossBreakdown batch_loss(std::span<const MolecularConfiguration> batch,
                         const ModelParameters& params,
                         const LossConfig& config);

} // namespace hienet
