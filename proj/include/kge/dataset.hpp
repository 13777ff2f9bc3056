#pragma once

#include "kge/types.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace kge {

// Dense bidirectional label<->index maps for entities and relations.
class Vocabulary {
public:
    std::uint32_t add_entity(std::string_view label);
    std::uint32_t add_relation(std::string_view label);

    std::optional<std::uint32_t> entity_id(std::string_view label) const;
    std::optional<std::uint32_t> relation_id(std::string_view label) const;

    const std::string& entity_label(std::uint32_t id) const { return entity_labels_.at(id); }
    const std::string& relation_label(std::uint32_t id) const { return relation_labels_.at(id); }

    std::size_t entity_count() const { return entity_labels_.size(); }
    std::size_t relation_count() const { return relation_labels_.size(); }

    // #Total = 2 * #Ent + #Rel
    std::uint64_t total_slots() const {
        return 2 * std::uint64_t(entity_count()) + relation_count();
    }

private:
    std::vector<std::string> entity_labels_;
    std::vector<std::string> relation_labels_;
    std::unordered_map<std::string, std::uint32_t> entity_index_;
    std::unordered_map<std::string, std::uint32_t> relation_index_;
};

// Indexed triples for one split, in file order.
struct TripleSet {
    std::vector<Triple> triples;
    std::string split_name;

    std::size_t size() const { return triples.size(); }
    bool empty() const { return triples.empty(); }
};

// Membership over all known triples plus the per-(h,r) tail sets and
// per-(r,t) head sets used by filtered ranking.
class FilterIndex {
public:
    FilterIndex() = default;

    void insert(const Triple& t);

    bool contains(const Triple& t) const { return known_.contains(t); }
    std::size_t size() const { return known_.size(); }
    std::size_t duplicates_skipped() const { return duplicates_; }

    // nullptr when no triple with that key exists
    const std::unordered_set<std::uint32_t>* tails_of(std::uint32_t head, std::uint32_t rel) const;
    const std::unordered_set<std::uint32_t>* heads_of(std::uint32_t rel, std::uint32_t tail) const;

private:
    static std::uint64_t pack(std::uint32_t a, std::uint32_t b) {
        return std::uint64_t(a) << 32 | b;
    }

    std::unordered_set<Triple, TripleHash> known_;
    std::unordered_map<std::uint64_t, std::unordered_set<std::uint32_t>> tails_;
    std::unordered_map<std::uint64_t, std::unordered_set<std::uint32_t>> heads_;
    std::size_t duplicates_ = 0;
};

// Per-relation tails-per-head / heads-per-tail averages over the training
// split (distinct-pair counts).
class BernStats {
public:
    BernStats() = default;
    BernStats(std::vector<double> tph, std::vector<double> hpt)
        : tph_(std::move(tph)), hpt_(std::move(hpt)) {}

    double tph(std::uint32_t rel) const;
    double hpt(std::uint32_t rel) const;
    bool has(std::uint32_t rel) const {
        return rel < tph_.size() && tph_[rel] > 0.0;
    }

private:
    std::vector<double> tph_;
    std::vector<double> hpt_;
};

// One triple per line, three tab-separated fields: head, relation, tail.
std::pair<TripleSet, Vocabulary> load_triples(const std::filesystem::path& path,
                                              std::string split_name);
TripleSet load_triples(const std::filesystem::path& path, const Vocabulary& vocab,
                       std::string split_name);

void write_triples(const std::filesystem::path& path, const TripleSet& split,
                   const Vocabulary& vocab);

FilterIndex build_filter_index(std::span<const TripleSet* const> splits);

BernStats compute_bern_stats(const TripleSet& train, std::size_t relation_count);

// train.txt / valid.txt / test.txt in one directory, sharing one vocabulary
// built jointly from all three splits (test-only labels stay representable).
struct Dataset {
    Vocabulary vocab;
    TripleSet train;
    TripleSet valid;
    TripleSet test;

    static Dataset load(const std::filesystem::path& dir);

    FilterIndex filter_all() const;
    FilterIndex filter_train_only() const;
};

}  // namespace kge
