#pragma once

#include "kge/model.hpp"
#include "kge/sampling.hpp"
#include "kge/scheduler.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace kge {

// Every knob of a training run. A fully resolved config is written next to
// the run outputs so any run can be replayed byte-for-byte.
// Precedence when resolving: defaults < preset < config file < flags.
struct RunConfig {
    std::string run_name = "run";
    std::string data_dir;
    std::string out_dir = "runs";

    std::string preset;            // "", "fb15k", "wn18"
    std::string model = "transe";  // transe|transh|transr|transd
    int dim = 100;
    int dim_r = 0;  // 0 -> dim
    double margin = 1.0;
    int batch_size = 4800;
    std::string dis = "l1";

    std::string sampler = "nser";  // nse|nser
    bool bern = false;
    int max_resample = 100;
    std::string neg_filter = "all";  // all|train

    std::string scheduler;  // "", "dlr", "dlr2" ("" -> per-model default)
    int eval_every = 5;
    int patience = 5;
    int max_decreases = 20;
    double lr_factor = 0.5;
    double lr = 0.001;   // lambda (dlr)
    double lr1 = 0.001;  // lambda1 (dlr2 dropping)
    double lr2 = 0.001;  // lambda2 (dlr2 tuning)

    int valid_sample = 1000;
    int max_epochs = 1000;
    std::uint64_t seed = 1;
    int workers = 0;  // 0 -> KGE_WORKERS env or hardware concurrency

    std::string init_from;        // TransE checkpoint for transr/transd
    std::string pretrain = "auto";  // auto|none

    ModelKind model_kind() const;
    Dissim dissimilarity() const;
    SamplerScheme sampler_scheme() const;
    DlrMode scheduler_mode() const;  // resolves "" to the per-model default
    int effective_dim_r() const { return dim_r > 0 ? dim_r : dim; }
    int effective_workers() const;

    SchedulerConfig scheduler_config() const;

    std::string to_json() const;            // human-readable, all fields
    static RunConfig from_json(const std::string& text);

    void save(const std::filesystem::path& path) const;
    static RunConfig load(const std::filesystem::path& path);
};

// Hyperparameters chosen by cross-validation for the two benchmark datasets;
// lr fields depend on the model family.
void apply_preset(RunConfig& cfg, const std::string& preset, const std::string& model);

// Overlays only the keys present in `text` onto `cfg`.
void overlay_json(RunConfig& cfg, const std::string& text);

}  // namespace kge
