#include "hienet/dataset.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <unordered_set>

#include "hienet/errors.hpp"
#include "hienet/rng.hpp"

namespace hienet {

DatasetSplit split_dataset(const std::vector<MolecularConfiguration>& data,
                           std::size_t n_train,
                           std::size_t n_validate,
                           std::uint64_t seed) {
    if (n_train + n_validate > data.size())
        throw DataError("insufficient data: requested " + std::to_string(n_train) + " + " +
                        std::to_string(n_validate) + " from " + std::to_string(data.size()) +
                        " configurations");

    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    Rng rng(seed);
    shuffle(order, rng);

    DatasetSplit split;
    split.seed = seed;
    split.train.reserve(n_train);
    split.validate.reserve(n_validate);
    split.test.reserve(data.size() - n_train - n_validate);
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto& config = data[order[k]];
        if (k < n_train)
            split.train.push_back(config);
        else if (k < n_train + n_validate)
            split.validate.push_back(config);
        else
            split.test.push_back(config);
    }
    return split;
}

double energy_stddev(const std::vector<MolecularConfiguration>& data) {
    if (data.empty()) throw DataError("energy_stddev: empty dataset");
    double mean = 0.0;
    for (const auto& config : data) {
        if (!config.energy)
            throw DataError("energy_stddev: configuration '" + config.id + "' has no energy");
        mean += *config.energy;
    }
    mean /= static_cast<double>(data.size());
    double var = 0.0;
    for (const auto& config : data) {
        const double d = *config.energy - mean;
        var += d * d;
    }
    return std::sqrt(var / static_cast<double>(data.size()));
}

ExclusionResult apply_exclusion_list(std::vector<MolecularConfiguration> data,
                                     const std::vector<std::string>& exclusions) {
    std::unordered_set<std::string> excluded(exclusions.begin(), exclusions.end());
    std::unordered_set<std::string> matched;

    ExclusionResult result;
    result.kept.reserve(data.size());
    for (auto& config : data) {
        if (excluded.count(config.id)) {
            matched.insert(config.id);
            ++result.removed;
        } else {
            result.kept.push_back(std::move(config));
        }
    }
    result.unmatched = excluded.size() - matched.size();
    return result;
}

std::vector<std::string> load_exclusion_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open exclusion list '" + path + "'");
    std::vector<std::string> ids;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        std::size_t end = line.find_last_not_of(" \t\r");
        ids.push_back(line.substr(begin, end - begin + 1));
    }
    return ids;
}

void write_dataset_manifest(const std::string& path,
                            const std::vector<std::pair<std::string, std::string>>& entries) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write manifest '" + path + "'");
    for (const auto& [key, value] : entries) out << key << " = " << value << '\n';
}

} // namespace hienet
