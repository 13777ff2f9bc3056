#pragma once

#include "kge/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kge {

enum class ModelKind { TransE, TransH, TransR, TransD };
enum class Dissim { L1, L2 };

std::string to_string(ModelKind kind);
std::string to_string(Dissim dis);
ModelKind model_kind_from_string(const std::string& s);
Dissim dissim_from_string(const std::string& s);

// Dense row-major table of embedding rows.
class Table {
public:
    Table() = default;
    Table(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::size_t size() const { return data_.size(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Embedding tables plus the model-family-specific projection parameters.
struct ModelParams {
    ModelKind kind = ModelKind::TransE;
    std::size_t dim_e = 0;
    std::size_t dim_r = 0;

    Table entity_emb;    // #Ent x d_e
    Table relation_emb;  // #Rel x d_r
    Table norm_vec;      // TransH: #Rel x d, unit rows
    Table rel_matrix;    // TransR: #Rel x (d_r * d_e), each row a d_r x d_e matrix
    Table ent_proj;      // TransD: #Ent x d_e
    Table rel_proj;      // TransD: #Rel x d_r

    std::size_t entity_count() const { return entity_emb.rows(); }
    std::size_t relation_count() const { return relation_emb.rows(); }
};

// dis(u): L1 = sum |u_i|, L2 = sqrt(sum u_i^2)
double dissim(std::span<const double> u, Dissim dis);

// dis((ph_i + r_i) - pt_i) accumulated in index order; every scoring path in
// the library goes through this one kernel so ranks are reproducible bitwise.
double translate_dissim(std::span<const double> ph, std::span<const double> r,
                        std::span<const double> pt, Dissim dis);

// Kind-specific projection of one entity into the space of `rel`.
// TransE copies; TransH projects onto the hyperplane of w_r; TransR applies
// M_r; TransD applies M_re = r_p e_p^T + I built from the entity's own
// projection vector. `out` must have dim_r elements.
void project_entity(const ModelParams& params, std::uint32_t rel, std::uint32_t ent,
                    std::span<double> out);

double score(const ModelParams& params, Dissim dis, const Triple& t);

// max(0, gamma + pos - neg)
double margin_loss(double pos, double neg, double gamma);

ModelParams init_random(ModelKind kind, std::size_t dim_e, std::size_t dim_r,
                        std::size_t entity_count, std::size_t relation_count,
                        std::uint64_t seed);

// TransH/R/D from a trained TransE: embeddings copied, TransR matrices set to
// identity, TransD projection vectors zeroed, TransH normal vectors fresh.
ModelParams init_pretrained(ModelKind kind, const ModelParams& transe, std::uint64_t seed);

// Entities projected onto the unit L2 ball; TransH normal vectors
// renormalized. Idempotent (rows already within 1e-9 of target are left
// untouched bitwise).
void apply_constraints(ModelParams& params);
void apply_entity_constraint(ModelParams& params, std::uint32_t ent);
void apply_norm_vec_constraint(ModelParams& params, std::uint32_t rel);

}  // namespace kge
