#include "hienet/params.hpp"

#include "hienet/errors.hpp"

namespace hienet {

void HyperParameters::validate() const {
    if (n_interaction < 1) throw DataError("n_interaction must be >= 1");
    if (n_onsite < 0) throw DataError("n_onsite must be >= 0");
    if (n_feature < 1) throw DataError("n_feature must be >= 1");
    if (n_sensitivity < 1) throw DataError("n_sensitivity must be >= 1");
    if (!(0.0 < r_low && r_low < r_high && r_high < r_cut))
        throw DataError("radii must satisfy 0 < r_low < r_high < r_cut");
}

ParameterLayout::ParameterLayout(const HyperParameters& hyper) {
    hyper.validate();
    const int n_species = hyper.species.size();
    const int width = hyper.n_feature;
    const int nu = hyper.n_sensitivity;

    auto add = [this](std::string name, std::vector<int> shape, bool learnable, bool l2) {
        TensorSpec spec;
        spec.name = std::move(name);
        spec.shape = std::move(shape);
        spec.size = 1;
        for (int d : spec.shape) spec.size *= static_cast<std::size_t>(d);
        spec.offset = value_count_;
        spec.learnable = learnable;
        spec.l2 = l2;
        if (learnable) {
            spec.grad_offset = learnable_count_;
            learnable_count_ += spec.size;
        }
        value_count_ += spec.size;
        tensors_.push_back(std::move(spec));
        return static_cast<int>(tensors_.size() - 1);
    };

    int in_width = n_species;
    for (int block = 1; block <= hyper.n_interaction; ++block) {
        const int layers_in_block = 1 + hyper.n_onsite;
        for (int k = 0; k < layers_in_block; ++k) {
            LayerInfo layer;
            layer.interaction = (k == 0);
            layer.in_width = in_width;
            layer.out_width = width;
            const std::string prefix = "layer" + std::to_string(layers_.size()) + ".";

            layer.weight = add(prefix + "weight", {width, in_width}, true, true);
            layer.bias = add(prefix + "bias", {width}, true, false);
            if (layer.interaction) {
                layer.pair_weight = add(prefix + "pair_weight", {nu, width, in_width}, true, true);
                layer.center_inv = add(prefix + "center_inv", {nu}, true, false);
                layer.width_inv = add(prefix + "width_inv", {nu}, true, false);
            }
            layer.res_mix = add(prefix + "res_mix", {width, width}, true, true);
            if (in_width != width)
                layer.res_skip = add(prefix + "res_skip", {width, in_width}, true, true);
            layer.res_bias = add(prefix + "res_bias", {width}, true, false);

            layers_.push_back(layer);
            in_width = width;
        }
    }

    for (int order = 0; order <= hyper.n_interaction; ++order) {
        ReadoutInfo readout;
        readout.order = order;
        readout.tap_layer = order == 0 ? -1 : order * (1 + hyper.n_onsite) - 1;
        readout.width = order == 0 ? n_species : width;
        const bool learnable = order > 0;
        const std::string prefix = "readout" + std::to_string(order) + ".";
        readout.weight = add(prefix + "weight", {readout.width}, learnable, learnable);
        readout.bias = add(prefix + "bias", {1}, learnable, false);
        readouts_.push_back(readout);
    }
}

int ParameterLayout::tensor_index(std::string_view name) const {
    for (std::size_t i = 0; i < tensors_.size(); ++i)
        if (tensors_[i].name == name) return static_cast<int>(i);
    return -1;
}

std::span<double> ModelParameters::tensor(std::string_view name) {
    const int idx = layout.tensor_index(name);
    if (idx < 0) throw ShapeError("no tensor named '" + std::string(name) + "'");
    return tensor(idx);
}

std::span<const double> ModelParameters::tensor(std::string_view name) const {
    const int idx = layout.tensor_index(name);
    if (idx < 0) throw ShapeError("no tensor named '" + std::string(name) + "'");
    return tensor(idx);
}

ParameterCount count_parameters(const HyperParameters& hyper) {
    const ParameterLayout layout(hyper);
    return {layout.learnable_count(), layout.fixed_count()};
}

} // namespace hienet
