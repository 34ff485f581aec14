#pragma once

#include <string>
#include <vector>

#include "sacc/checkpoint.hpp"
#include "sacc/config.hpp"
#include "sacc/dataset.hpp"
#include "sacc/metrics.hpp"
#include "sacc/model.hpp"

namespace sacc {

struct EpochRecord {
    int epoch = 0;  // 1-based
    double train_loss = 0;
    double val_accuracy = 0;
};

struct TrainOutput {
    Checkpoint best;   // highest val accuracy, earlier epoch on ties
    Checkpoint final;  // parameters after the last epoch
    std::vector<EpochRecord> history;
    int best_epoch = 0;
};

// Mini-batch cross-entropy training with Adamax. Shuffling is reseeded per
// epoch from (seed, epoch), so a fixed seed reproduces the history exactly.
TrainOutput train_model(const Dataset& dataset, ModelConfig model_config,
                        const TrainConfig& train_config, AttnPath path = AttnPath::kSparse);

Metrics evaluate_model(const Checkpoint& checkpoint, const Dataset& dataset, Split split,
                       AttnPath path = AttnPath::kSparse, uint64_t mask_seed = 0);

// argmax class and softmax probabilities for one statement sequence
std::pair<int, std::vector<double>> predict(const Checkpoint& checkpoint,
                                            const StatementSequence& seq,
                                            AttnPath path = AttnPath::kSparse,
                                            uint64_t mask_seed = 0);

std::string history_to_csv(const std::vector<EpochRecord>& history);

}  // namespace sacc
