#pragma once

#include "kge/run_config.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace kge {

struct TrainOutcome {
    std::size_t epochs_run = 0;
    double best_valid_mean_rank = 0.0;
    std::filesystem::path run_dir;
    std::filesystem::path best_checkpoint;
    std::filesystem::path final_checkpoint;
    std::filesystem::path metrics_log;
    std::filesystem::path resolved_config;
};

// The full train / evaluate / schedule loop: loads the dataset, initializes
// the model (running a TransE pretraining phase first for TransR/TransD
// unless a checkpoint or --pretrain none is given), trains until the
// scheduler stops or max_epochs, and writes the resolved config, metrics
// log, and best/final checkpoints into <out_dir>/<run_name>/.
TrainOutcome run_training(const RunConfig& cfg);

}  // namespace kge
