#pragma once

#include "kge/dataset.hpp"
#include "kge/model.hpp"
#include "kge/types.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace kge {

struct DirectionStats {
    std::uint64_t rank_sum = 0;
    std::uint64_t count = 0;
    std::uint64_t hits10 = 0;

    double mean_rank() const { return count ? double(rank_sum) / double(count) : 0.0; }
    double hits_at_10() const { return count ? double(hits10) / double(count) : 0.0; }

    void add(std::uint32_t rank) {
        rank_sum += rank;
        count += 1;
        hits10 += rank <= 10;
    }

    void merge(const DirectionStats& o) {
        rank_sum += o.rank_sum;
        count += o.count;
        hits10 += o.hits10;
    }
};

// Partial result of one worker: sums and counts, never means.
struct MetricsPart {
    DirectionStats head;
    DirectionStats tail;
};

struct EvalMetrics {
    double mean_rank = 0.0;  // both directions pooled
    double hits_at_10 = 0.0;
    DirectionStats head;
    DirectionStats tail;
    std::uint64_t triple_count = 0;
    double ms_per_triple = 0.0;
};

struct RankRecord {
    std::uint32_t triple_index = 0;
    std::uint32_t head_rank = 0;
    std::uint32_t tail_rank = 0;
};

struct EvalResult {
    EvalMetrics metrics;
    std::vector<RankRecord> records; // ordered by triple_index
};

// Scores every entity as the candidate for `dir` of `triple`.
// `projected` is the entity table projected into the relation's space
// (project_entity_table, or entity_emb itself for TransE).
void score_all_candidates(const ModelParams& params, Dissim dis, const Triple& triple,
                          Direction dir, const Table& projected, std::span<double> out);

// All entities projected into the space of `rel` (identity copy for TransE).
void project_entity_table(const ModelParams& params, std::uint32_t rel, Table& out);

// 1 + #candidates with strictly lower score after removing candidates that
// form other known triples; ties resolve in favor of the ground truth.
std::uint32_t rank_one(const ModelParams& params, Dissim dis, const Triple& triple,
                       Direction dir, const FilterIndex& filter);

// Sequential scan, one triple at a time: the oracle every parallel engine
// must match rank-for-rank.
EvalResult evaluate_naive(const ModelParams& params, Dissim dis, const TripleSet& split,
                          const FilterIndex& filter);

// Split divided into c equal contiguous chunks, one worker per chunk, each
// ranking its triples against the full entity table. Single-space models
// only (TransE).
EvalResult evaluate_parallel_global(const ModelParams& params, Dissim dis,
                                    const TripleSet& split, const FilterIndex& filter,
                                    int workers);

// Split bucketed by relation into a FIFO queue drained by c workers; each
// bucket projects the full entity table into its relation's space once.
// For models with relation-specific projections (TransH/R/D).
EvalResult evaluate_parallel_by_relation(const ModelParams& params, Dissim dis,
                                         const TripleSet& split, const FilterIndex& filter,
                                         int workers);

// Dispatches on the model kind (TransE -> global, else by-relation).
EvalResult evaluate_parallel(const ModelParams& params, Dissim dis, const TripleSet& split,
                             const FilterIndex& filter, int workers);

// Exact weighted pooling of partial sums/counts.
EvalMetrics merge_metrics(std::span<const MetricsPart> parts);

// Filtered MeanRank on a seeded sample of the validation split; the same
// seed draws the same sample, so successive evaluation points are
// comparable.
double validation_sample_metric(const ModelParams& params, Dissim dis, const TripleSet& valid,
                                const FilterIndex& filter, std::size_t sample_size,
                                std::uint64_t seed, int workers);

}  // namespace kge
