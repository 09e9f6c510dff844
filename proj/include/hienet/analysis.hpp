#pragma once

#include <span>
#include <string>
#include <vector>

#include "hienet/params.hpp"
#include "hienet/types.hpp"

namespace hienet {

struct MoleculeRecord {
    std::string id;
    double energy_pred = 0.0; // kcal/mol
    double energy_ref = 0.0;  // kcal/mol
    double abs_error = 0.0;   // kcal/mol
    double non_hier = 0.0;    // R
};

struct EvaluationReport {
    double mae = 0.0;
    double rmse = 0.0;
    double pct_above_1kcal = 0.0;
    std::size_t n_molecules = 0;
    std::vector<MoleculeRecord> per_molecule;
};

// Forward passes over a labeled dataset; every configuration must carry a
// reference energy.
EvaluationReport evaluate(const ModelParameters& params,
                          const std::vector<MolecularConfiguration>& data);

// MAE of the prediction truncated to orders 0..max_order.
double truncated_mae(const ModelParameters& params,
                     const std::vector<MolecularConfiguration>& data, int max_order);

// Empirical quantiles of |error| binned by log10(R). Quantiles use the
// nearest-rank convention (no interpolation); empty bins carry NaN. Records
// with R = 0 cannot be log-binned and are counted separately.
struct QuantileTable {
    double bin_width_log10 = 0.0;
    std::vector<double> probabilities;
    struct Row {
        double log10_lo = 0.0;
        double log10_hi = 0.0;
        std::size_t count = 0;
        std::vector<double> quantiles; // NaN when the bin is empty
    };
    std::vector<Row> rows;
    std::size_t zero_r_count = 0;
};

QuantileTable error_quantiles(std::span<const MoleculeRecord> records,
                              std::span<const double> probabilities,
                              double bin_width_log10);

// Spearman rank correlation with a one-sided p-value for positive
// association (t approximation, average ranks on ties).
struct RankCorrelation {
    double rho = 0.0;
    double p_value = 1.0;
};
RankCorrelation spearman(std::span<const double> x, std::span<const double> y);

// CSV emitters for external plotting; the artifact renders no figures.
void write_report_csv(const std::string& path, const EvaluationReport& report);
void write_records_csv(const std::string& path, std::span<const MoleculeRecord> records);
std::vector<MoleculeRecord> read_records_csv(const std::string& path);
void write_quantiles_csv(const std::string& path, const QuantileTable& table);
void write_truncation_csv(const std::string& path, std::span<const double> truncated_maes);

} // namespace hienet
