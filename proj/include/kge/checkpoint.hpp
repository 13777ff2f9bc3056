#pragma once

#include "kge/model.hpp"

#include <filesystem>
#include <utility>

namespace kge {

// Format: magic "KGE1", one text header line "kind d_e d_r #Ent #Rel dis\n",
// then the parameter blocks in fixed order (entity_emb, relation_emb,
// kind-specific extras), each row-major little-endian float32.
// Written atomically (temp file + rename).
void save_checkpoint(const std::filesystem::path& path, const ModelParams& params, Dissim dis);

std::pair<ModelParams, Dissim> load_checkpoint(const std::filesystem::path& path);

}  // namespace kge
