#pragma once

#include <span>
#include <vector>

#include "hienet/geometry.hpp"
#include "hienet/matrix.hpp"
#include "hienet/params.hpp"

namespace hienet {

// Softplus activation, overflow-free for any finite argument.
double softplus(double x);
// d softplus / dx, the logistic function.
double softplus_deriv(double x);

// Squared-cosine cutoff: 1 at r = 0, exactly 0 for r >= r_cut, C1 everywhere.
double cutoff_fn(double r, double r_cut);

// Gaussian-in-inverse-distance sensitivities, modulated by the cutoff.
// center_inv and width_inv hold 1/mu and 1/sigma; width_inv is the Gaussian
// width measured on the inverse-distance axis. r = 0 is rejected.
void sensitivities(double r,
                   std::span<const double> center_inv,
                   std::span<const double> width_inv,
                   double r_cut,
                   std::span<double> out);
std::vector<double> sensitivity_values(double r,
                                       std::span<const double> center_inv,
                                       std::span<const double> width_inv,
                                       double r_cut);

// Row-wise affine map + softplus; no mixing between atoms.
FeatureMatrix on_site_layer(const FeatureMatrix& z, const Matrix& weight,
                            std::span<const double> bias);

// On-site term plus the sensitivity-weighted sum over neighbors, then
// softplus. `pairs` must have been built with the model cutoff.
FeatureMatrix interaction_layer(const FeatureMatrix& z, const NeighborList& pairs,
                                const Tensor3& pair_weight,
                                std::span<const double> center_inv,
                                std::span<const double> width_inv,
                                const Matrix& weight, std::span<const double> bias);

// Residual combination: res_mix * z_new + res_skip * z_old + res_bias.
// res_skip == nullptr means the implicit identity (equal widths).
FeatureMatrix resnet_combine(const FeatureMatrix& z_new, const FeatureMatrix& z_old,
                             const Matrix& res_mix, const Matrix* res_skip,
                             std::span<const double> res_bias);

// Per-atom linear readout in kcal/mol.
std::vector<double> linear_readout(const FeatureMatrix& z, std::span<const double> weight,
                                   double bias);

// Per-atom, per-order energies plus their sums and the non-hierarchicality R.
struct EnergyDecomposition {
    Matrix per_atom_per_order;     // N_atom x (n_interaction + 1), kcal/mol
    std::vector<double> per_atom;  // kcal/mol
    double total = 0.0;            // kcal/mol
    double non_hierarchicality = 0.0;
};

// Full forward pass: one-hot input, interaction blocks with residual
// combination, energy readouts at the input and after each block.
EnergyDecomposition forward(const MolecularConfiguration& config, const ModelParameters& params);

// Forward pass that keeps every intermediate needed by the backward pass.
struct LayerCache {
    FeatureMatrix preact;           // rows x out, before softplus
    FeatureMatrix activated;        // softplus(preact)
    FeatureMatrix output;           // after the residual combination
    Matrix gathered;                // rows x (nu * in): sensitivity-weighted
                                    // neighbor sums, interaction layers only
    std::vector<double> pair_sens;  // pairs x nu, interaction layers only
};

struct ForwardCache {
    NeighborList neighbors;
    FeatureMatrix input;
    std::vector<LayerCache> layers;
    EnergyDecomposition decomp;
};

ForwardCache forward_cached(const MolecularConfiguration& config, const ModelParameters& params);

} // namespace hienet
