#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hienet/hyper.hpp"

namespace hienet {

inline constexpr std::size_t no_grad = std::numeric_limits<std::size_t>::max();

// One named tensor inside the flat parameter vector.
struct TensorSpec {
    std::string name;
    std::vector<int> shape; // row-major
    std::size_t offset = 0; // into ModelParameters::values
    std::size_t size = 0;
    std::size_t grad_offset = no_grad; // into GradientSet::values; no_grad when fixed
    bool learnable = true;
    bool l2 = false; // participates in the L2 penalty
};

// Structural map from hyperparameters to tensors. Layers are numbered
// globally, block by block: each block is one interaction layer followed by
// n_onsite on-site layers. Energy readouts tap the one-hot input (order 0)
// and the final layer of each block (order 1..n_interaction).
//
// Per layer L the tensors are
//   layer{L}.weight      out x in     affine map on the atom's own features
//   layer{L}.bias        out
//   layer{L}.pair_weight nu x out x in   (interaction only)
//   layer{L}.center_inv  nu          inverse-distance Gaussian centers
//   layer{L}.width_inv   nu          inverse-distance Gaussian widths
//   layer{L}.res_mix     out x out   residual combination of the new features
//   layer{L}.res_skip    out x in    pass-through; only stored when in != out,
//                                    otherwise it is an implicit fixed identity
//   layer{L}.res_bias    out
// and per readout order n
//   readout{n}.weight    tap width   n = 0: kcal/mol, fixed after the baseline
//                                    fit; n >= 1: dimensionless (energies use
//                                    sigma_E * weight)
//   readout{n}.bias      1           kcal/mol; fixed for n = 0
class ParameterLayout {
public:
    ParameterLayout() = default;
    explicit ParameterLayout(const HyperParameters& hyper);

    struct LayerInfo {
        bool interaction = false;
        int in_width = 0;
        int out_width = 0;
        // Indices into tensors(); -1 when the tensor does not exist.
        int weight = -1, bias = -1;
        int pair_weight = -1, center_inv = -1, width_inv = -1;
        int res_mix = -1, res_skip = -1, res_bias = -1;
    };
    struct ReadoutInfo {
        int order = 0;
        int tap_layer = -1; // global layer index; -1 taps the one-hot input
        int width = 0;
        int weight = -1, bias = -1;
    };

    const std::vector<TensorSpec>& tensors() const { return tensors_; }
    const TensorSpec& tensor(int idx) const { return tensors_[static_cast<std::size_t>(idx)]; }
    int tensor_index(std::string_view name) const; // -1 when absent
    const std::vector<LayerInfo>& layers() const { return layers_; }
    const std::vector<ReadoutInfo>& readouts() const { return readouts_; }

    std::size_t value_count() const { return value_count_; }
    std::size_t learnable_count() const { return learnable_count_; }
    std::size_t fixed_count() const { return value_count_ - learnable_count_; }

private:
    std::vector<TensorSpec> tensors_;
    std::vector<LayerInfo> layers_;
    std::vector<ReadoutInfo> readouts_;
    std::size_t value_count_ = 0;
    std::size_t learnable_count_ = 0;
};

// The full learned parameter set as one flat vector plus its layout, with the
// frozen training-set energy scale sigma_E carried alongside.
struct ModelParameters {
    HyperParameters hyper;
    ParameterLayout layout;
    std::vector<double> values;
    double energy_std = 0.0; // sigma_E, kcal/mol

    ModelParameters() = default;
    explicit ModelParameters(const HyperParameters& h)
        : hyper(h), layout(h), values(layout.value_count(), 0.0) {}

    std::span<double> tensor(int idx) {
        const TensorSpec& t = layout.tensor(idx);
        return {values.data() + t.offset, t.size};
    }
    std::span<const double> tensor(int idx) const {
        const TensorSpec& t = layout.tensor(idx);
        return {values.data() + t.offset, t.size};
    }
    std::span<double> tensor(std::string_view name);
    std::span<const double> tensor(std::string_view name) const;
};

// Gradients for the learnable tensors only; fixed tensors have no entry.
// Offsets come from TensorSpec::grad_offset.
struct GradientSet {
    std::vector<double> values;

    GradientSet() = default;
    explicit GradientSet(const ParameterLayout& layout)
        : values(layout.learnable_count(), 0.0) {}

    std::span<double> tensor(const TensorSpec& t) {
        return {values.data() + t.grad_offset, t.learnable ? t.size : 0};
    }
    std::span<const double> tensor(const TensorSpec& t) const {
        return {values.data() + t.grad_offset, t.learnable ? t.size : 0};
    }
    void clear() { std::fill(values.begin(), values.end(), 0.0); }
};

struct ParameterCount {
    std::size_t learnable = 0;
    std::size_t fixed = 0;
    std::size_t total() const { return learnable + fixed; }
};

ParameterCount count_parameters(const HyperParameters& hyper);

} // namespace hienet
