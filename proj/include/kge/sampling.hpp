#pragma once

#include "kge/dataset.hpp"
#include "kge/rng.hpp"
#include "kge/types.hpp"

#include <cstdint>

namespace kge {

enum class SamplerScheme { NSE, NSER };
enum class EntityChoice { Uniform, Bern };
enum class Slot { Head, Tail, Relation };

struct SamplerConfig {
    SamplerScheme scheme = SamplerScheme::NSER;
    EntityChoice entity_choice = EntityChoice::Uniform;
    int max_resample = 100;
    std::uint64_t seed = 0;
};

struct NegativeSample {
    Triple triple;
    // set when every resample attempt hit a known triple
    bool possibly_false_negative = false;
};

// Draws corrupted triples, filtering out false negatives against `filter`.
// Each training thread owns its own sampler; filter and stats are shared
// read-only.
class NegativeSampler {
public:
    NegativeSampler(const SamplerConfig& cfg, std::size_t entity_count,
                    std::size_t relation_count, const FilterIndex* filter,
                    const BernStats* bern);

    // NSER slot distribution: P(Head) = P(Tail) = #Ent/#Total,
    // P(Relation) = #Rel/#Total.
    Slot choose_slot();

    NegativeSample corrupt(const Triple& positive);

    std::uint64_t exhausted_count() const { return exhausted_; }

private:
    std::uint32_t draw_excluding(std::uint64_t size, std::uint32_t original);
    Slot pick_slot(const Triple& positive);
    double bern_head_prob(std::uint32_t rel) const;

    SamplerConfig cfg_;
    std::size_t entity_count_;
    std::size_t relation_count_;
    const FilterIndex* filter_;
    const BernStats* bern_;
    Rng rng_;
    std::uint64_t exhausted_ = 0;
};

}  // namespace kge
