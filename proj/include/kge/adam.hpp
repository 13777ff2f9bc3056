#pragma once

#include "kge/gradient.hpp"
#include "kge/model.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace kge {

struct AdamConfig {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

// Sparse-row Adam: moments and step counters live per row, so rows never
// touched keep zero moments and bias correction uses each row's own age.
class AdamState {
public:
    AdamState(const ModelParams& params, AdamConfig cfg = {});

    const AdamConfig& config() const { return cfg_; }

    std::span<double> moment1(ParamBlock block, std::uint32_t row);
    std::span<double> moment2(ParamBlock block, std::uint32_t row);
    std::uint64_t step_count(ParamBlock block, std::uint32_t row) const;
    std::uint64_t& step_count(ParamBlock block, std::uint32_t row);

private:
    struct BlockState {
        Table m;
        Table v;
        std::vector<std::uint64_t> step;
    };

    BlockState& block(ParamBlock b) { return blocks_.at(static_cast<std::size_t>(b)); }
    const BlockState& block(ParamBlock b) const { return blocks_.at(static_cast<std::size_t>(b)); }

    AdamConfig cfg_;
    std::vector<BlockState> blocks_;  // indexed by ParamBlock
};

// One bias-corrected Adam update per touched row; untouched rows unchanged.
void adam_step(AdamState& state, const SparseGrad& grads, ModelParams& params, double lr);

}  // namespace kge
