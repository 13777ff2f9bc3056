#pragma once

#include "kge/adam.hpp"
#include "kge/dataset.hpp"
#include "kge/model.hpp"
#include "kge/sampling.hpp"

#include <cstdint>

namespace kge {

struct TrainConfig {
    std::size_t batch_size = 0;
    double margin = 1.0;
    Dissim dis = Dissim::L1;
    std::uint64_t seed = 0;
};

struct EpochStats {
    double loss = 0.0;       // summed hinge loss over the epoch
    std::size_t batches = 0; // optimizer steps taken
    std::uint64_t resample_exhausted = 0;
};

// One pass over the shuffled training split: one negative per positive,
// gradients accumulated per batch, a single Adam step per batch, constraints
// re-applied to the touched rows. Fully deterministic given (seed, epoch).
EpochStats train_epoch(ModelParams& params, const TripleSet& train, const TrainConfig& cfg,
                       std::size_t epoch, NegativeSampler& sampler, AdamState& adam,
                       double lr);

}  // namespace kge
