#pragma once

#include <cstdint>

#include "sacc/transformer.hpp"

namespace sacc {

// Enabled-pattern union for one statement sequence. `seed` feeds the random
// pattern only.
AttentionMask build_mask(const StatementSequence& seq, const ModelConfig& config, uint64_t seed);

// Full forward for one program: encode statement trees, run the masked
// encoder stack, pool, project to logits (1×P).
Value model_logits(const StatementSequence& seq, const Vocabulary& vocab,
                   const ModelParams& params, const ModelConfig& config, AttnPath path,
                   uint64_t mask_seed, AttnTrace* trace = nullptr);

}  // namespace sacc
