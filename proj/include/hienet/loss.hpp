#pragma once

#include <span>

#include "hienet/matrix.hpp"
#include "hienet/params.hpp"

namespace hienet {

double mean_abs_error(std::span<const double> predicted, std::span<const double> reference);
double rms_error(std::span<const double> predicted, std::span<const double> reference);

// lambda_l2 times the summed squares of the weight tensors flagged for L2
// (self weights, pair weights, residual mixes and learnable skips, and the
// dimensionless readout weights). Biases, sensitivity parameters, and fixed
// tensors are excluded.
double l2_penalty(const ModelParameters& params, double lambda_l2);

// Sum over orders n >= 1 and atoms of e_n^2 / (e_n^2 + e_{n-1}^2) on the
// per-atom per-order energy matrix. A 0/0 term counts as 0: an exactly
// converged hierarchy is not penalized.
double non_hierarchicality(const Matrix& per_atom_per_order);

struct LossBreakdown {
    double mae = 0.0;        // kcal/mol
    double rmse = 0.0;       // kcal/mol
    double l2_term = 0.0;    // dimensionless
    double hier_term = 0.0;  // dimensionless
    double total = 0.0;      // dimensionless
    double energy_std = 0.0; // sigma_E used for normalization, kcal/mol
};

// total = (mae + rmse) / sigma_E + l2_term + hier_term, with the
// non-hierarchicality averaged per molecule over the batch.
LossBreakdown total_loss(std::span<const double> predicted,
                         std::span<const double> reference,
                         std::span<const double> per_molecule_r,
                         const ModelParameters& params,
                         double lambda_l2,
                         double lambda_r,
                         double energy_std);

} // namespace hienet
