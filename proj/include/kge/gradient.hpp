#pragma once

#include "kge/model.hpp"
#include "kge/types.hpp"

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace kge {

enum class ParamBlock { EntityEmb, RelationEmb, NormVec, RelMatrix, EntProj, RelProj };

struct RowKey {
    ParamBlock block;
    std::uint32_t row;

    bool operator==(const RowKey&) const = default;
};

struct RowKeyHash {
    std::size_t operator()(const RowKey& k) const noexcept {
        return std::size_t(k.row) * 31 + static_cast<std::size_t>(k.block);
    }
};

// blocks present for a given model kind, in checkpoint order
std::vector<ParamBlock> param_blocks(const ModelParams& params);

Table& block_table(ModelParams& params, ParamBlock block);
const Table& block_table(const ModelParams& params, ParamBlock block);

// Rows touched by one or more pair gradients, with dense per-row deltas.
class SparseGrad {
public:
    std::vector<double>& row(RowKey key, std::size_t len);

    auto begin() const { return rows_.begin(); }
    auto end() const { return rows_.end(); }
    bool empty() const { return rows_.empty(); }
    std::size_t size() const { return rows_.size(); }
    void clear() { rows_.clear(); }

    const std::vector<double>* find(RowKey key) const;

private:
    std::unordered_map<RowKey, std::vector<double>, RowKeyHash> rows_;
};

// Gradient of max(0, gamma + f(pos) - f(neg)) accumulated into `out`;
// exactly zero contribution (and no touched rows added) when the hinge is
// inactive. Returns the pair's hinge loss.
double pair_gradient(const ModelParams& params, Dissim dis, const Triple& pos,
                     const Triple& neg, double gamma, SparseGrad& out);

}  // namespace kge
