#include "sacc/model.hpp"

namespace sacc {

AttentionMask build_mask(const StatementSequence& seq, const ModelConfig& config, uint64_t seed) {
    size_t n = seq.size();
    std::vector<AttentionMask> parts;
    if (config.pattern_local)
        parts.push_back(local_mask(n, static_cast<size_t>(config.window), config.local_strict));
    if (config.pattern_global) parts.push_back(global_mask(n, config.resolve_global(n)));
    if (config.pattern_ast) parts.push_back(ast_mask(adjacency(seq, config.adj_closure)));
    if (config.pattern_dilated)
        parts.push_back(dilated_mask(n, static_cast<size_t>(config.window),
                                     static_cast<size_t>(config.dilated_gap)));
    if (config.pattern_random)
        parts.push_back(random_mask(n, std::min<size_t>(static_cast<size_t>(config.random_per_row), n),
                                    seed));
    if (parts.empty()) return AttentionMask(n);  // diagonal only
    return mask_union(parts);
}

Value model_logits(const StatementSequence& seq, const Vocabulary& vocab,
                   const ModelParams& params, const ModelConfig& config, AttnPath path,
                   uint64_t mask_seed, AttnTrace* trace) {
    AttentionMask mask = build_mask(seq, config, mask_seed);
    Value embedded = encode_sequence(seq, params.encoder, vocab);
    Value stacked = encoder_stack(embedded, params, mask, path, trace);
    return classify(stacked, seq.size(), params);
}

}  // namespace sacc
