#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "hienet/grad.hpp"
#include "hienet/params.hpp"
#include "hienet/types.hpp"

namespace hienet {

// Optimization schedule. Defaults are the reference recipe: Adam at 1e-3
// with 30-molecule mini-batches, learning-rate halving after a 50-epoch
// validation plateau (not before epoch 100), termination after two decays
// without improvement or at 2000 epochs.
struct OptimizerConfig {
    double eta_init = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    int batch_size = 30;
    double alpha_decay = 0.5;
    int t_patience = 50;
    int t_init = 100;
    int t_max = 2000;
    double lambda_l2 = 1e-6;
    double lambda_r = 1e-2;
    std::uint64_t seed = 0;

    void validate() const;
};

// Adam moment accumulators; sized to the learnable parameters only.
struct AdamState {
    std::vector<double> m;
    std::vector<double> v;
    long step = 0;

    AdamState() = default;
    explicit AdamState(const ParameterLayout& layout)
        : m(layout.learnable_count(), 0.0), v(layout.learnable_count(), 0.0) {}
};

// Plateau-annealing state machine, separated from train() so the schedule
// can be driven with a stubbed metric. Epochs are 1-based. The patience
// window is measured from the latest of (last improvement, last decay,
// t_init), so the learning rate never decays before epoch t_init +
// t_patience and each decay grants a fresh window.
class PlateauScheduler {
public:
    PlateauScheduler(double eta_init, double alpha_decay, int t_init, int t_patience);

    struct Update {
        bool improved = false;
        bool decayed = false;
        bool stop = false;
        double eta = 0.0; // rate to use from the next epoch on
    };
    // Call once per epoch with the validation MAE observed at its end.
    Update observe(int epoch, double validation_mae);

    double eta() const { return eta_; }
    double best_score() const { return best_score_; }

private:
    double eta_;
    double alpha_decay_;
    int t_init_;
    int t_patience_;
    double best_score_;
    int anchor_epoch_ = 0; // last improvement or decay
    int decays_since_improvement_ = 0;
};

// Least-squares fit of reference energies to species counts plus a constant,
// solved minimum-norm (eigenvalue-truncated pseudoinverse of the normal
// matrix). Returns ({w_s}, b) in kcal/mol.
std::pair<std::vector<double>, double> fit_species_baseline(
    const std::vector<MolecularConfiguration>& train, const SpeciesTable& species);

// Glorot-uniform weights, zero biases, the frozen order-0 baseline from
// fit_species_baseline, order-n readout weights scaled by 10^-2n, sensitivity
// centers uniformly spaced on the inverse-distance axis between 1/r_low and
// 1/r_high, and all widths at 2 * n_sensitivity * r_low.
ModelParameters init_parameters(const HyperParameters& hyper,
                                const std::vector<MolecularConfiguration>& train,
                                std::uint64_t seed);

// Fresh disjoint cover of [0, n); all batches have batch_size elements except
// possibly the last. Consumes the rng stream, so consecutive epochs shuffle
// differently while staying reproducible for a fixed seed.
std::vector<std::vector<std::size_t>> make_minibatches(std::size_t n, std::size_t batch_size,
                                                       Rng& rng);

// Standard bias-corrected Adam update on the learnable tensors. Throws
// NumericError on non-finite gradients. Returns the names of sensitivity
// tensors that left the positive domain, for the caller to warn about.
std::vector<std::string> adam_step(ModelParameters& params, const GradientSet& grads,
                                   AdamState& state, double eta, const OptimizerConfig& opt);

struct EpochRecord {
    int epoch = 0;
    double train_mae = 0.0;  // kcal/mol, mean over the epoch's batches
    double train_rmse = 0.0; // kcal/mol, mean over the epoch's batches
    double l2_term = 0.0;
    double hier_term = 0.0;
    double val_mae = 0.0; // kcal/mol, full validation set
    double eta = 0.0;     // learning rate used during this epoch
};

struct TrainResult {
    ModelParameters best_params;
    double best_score = 0.0; // best validation MAE, kcal/mol
    std::vector<EpochRecord> history;
    std::string stop_reason; // "plateau", "t_max", or "numeric"
};

struct TrainHooks {
    std::function<void(const EpochRecord&)> on_epoch;
    // Called at every new best validation score with the snapshot parameters.
    std::function<void(const ModelParameters&, double best_score, int epoch)> on_best;
};

// Full training loop: mini-batch Adam on the regularized objective with
// plateau annealing and early stopping; returns the best-validation snapshot
// and the per-epoch history. Deterministic for a fixed seed.
TrainResult train(const DatasetSplit& split, const HyperParameters& hyper,
                  const OptimizerConfig& opt, const TrainHooks& hooks = {});

} // namespace hienet
