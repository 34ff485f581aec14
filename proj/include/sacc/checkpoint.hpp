#pragma once

#include <string>
#include <vector>

#include "sacc/config.hpp"
#include "sacc/transformer.hpp"
#include "sacc/vocab.hpp"

namespace sacc {

// Everything needed to resume evaluation exactly: config, vocabulary, label
// names, and all parameter arrays.
struct Checkpoint {
    ModelConfig config;
    Vocabulary vocab;
    std::vector<std::string> label_names;
    ModelParams params;
};

// File layout: magic "SACC" | format version u32 LE | header length u64 LE |
// header JSON (config, vocab, labels, parameter manifest with name/shape/
// offset) | little-endian f64 arrays in manifest order.
void save_checkpoint(const std::string& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::string& path);

// deep copy of parameter values (grads reset)
ModelParams clone_params(const ModelParams& params);

}  // namespace sacc
