#pragma once

#include "kge/types.hpp"

#include <cstddef>

namespace kge {

enum class DlrMode { Dlr, Dlr2 };
enum class DlrPhase { Dropping, Tuning };

struct SchedulerConfig {
    DlrMode mode = DlrMode::Dlr;
    int eval_every = 5;     // E: epochs per evaluation
    int max_decreases = 20; // D: lr decreases allowed
    int patience = 5;       // P: consecutive non-improving evaluations
    double factor = 0.5;    // s: multiplicative lr decrease
    double lr = 0.001;      // lambda (Dlr) / lambda2 tuning lr (Dlr2)
    double dropping_lr = 0.001; // lambda1 (Dlr2 only)
};

struct SchedulerAction {
    enum class Kind { Continue, DecreaseLr, Stop };
    Kind kind = Kind::Continue;
    double new_lr = 0.0; // set for DecreaseLr
};

// Plateau-driven learning-rate state machine. Validation metric is a
// MeanRank: lower is better. A pure function of (config, metric sequence).
//
// Tuning phase: an improvement resets patience; after P consecutive
// non-improving evaluations the lr is multiplied by s, and once D decreases
// have been spent the next plateau stops the run.
//
// Dropping phase (Dlr2): lr stays at lambda1 while the metric keeps
// degrading; the first non-degrading evaluation becomes the tuning-phase
// baseline and the lr switches to lambda2.
class DlrScheduler {
public:
    explicit DlrScheduler(const SchedulerConfig& cfg);

    SchedulerAction observe(double metric);

    double current_lr() const { return current_lr_; }
    DlrPhase phase() const { return phase_; }
    double best_metric() const { return best_; }
    int patience_count() const { return patience_; }
    int decrease_count() const { return decreases_; }
    bool stopped() const { return stopped_; }

    // true iff `epoch` (1-based) is an evaluation point
    static bool should_evaluate(std::size_t epoch, int eval_every);

    // factor^k by k successive multiplications; the lr after k decreases is
    // exactly tuning_lr * pow_factor(s, k)
    static double pow_factor(double factor, int k);

private:
    SchedulerConfig cfg_;
    DlrPhase phase_;
    double current_lr_;
    double best_;
    double prev_metric_ = 0.0;
    bool has_prev_ = false;
    int patience_ = 0;
    int decreases_ = 0;
    bool stopped_ = false;
};

}  // namespace kge
