#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sacc/model_config.hpp"

namespace sacc {

struct TrainConfig {
    int epochs = 30;
    int batch_size = 16;
    double lr = 0.002;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
    uint64_t seed = 1;
    bool shuffle = true;

    void validate() const;
};

// Model + training settings merged from an optional JSON config file and
// repeatable `key=value` overrides. Unknown keys are rejected.
struct RunConfig {
    ModelConfig model;
    TrainConfig train;
};

RunConfig load_run_config(const std::string& config_path,
                          const std::vector<std::string>& overrides);

std::string model_config_to_json(const ModelConfig& config, int indent = -1);
ModelConfig model_config_from_json(const std::string& text);

}  // namespace sacc
