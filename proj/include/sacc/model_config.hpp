#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sacc {

// Model hyperparameters and sparse-pattern selection. Defaults follow the
// shipped configuration: d_model 128, 2 layers, 2 heads of 64, feed-forward
// 2048, window 3, one global element, {local, global, ast} enabled.
struct ModelConfig {
    int d_model = 128;
    int layers = 2;
    int heads = 2;
    int d_k = 64;
    int d_v = 64;
    int d_ff = 2048;
    int window = 3;
    int global_size = 1;
    std::vector<size_t> global_indices;  // explicit global elements; empty = first `global_size`
    bool pattern_local = true;
    bool pattern_global = true;
    bool pattern_ast = true;
    bool pattern_dilated = false;
    bool pattern_random = false;
    int dilated_gap = 2;
    int random_per_row = 2;
    int num_classes = 0;  // set from the dataset at train time
    std::string pooling = "max";
    bool local_strict = false;   // |i-j| < floor(w/2) variant of the local pattern
    bool adj_closure = false;    // ancestor closure instead of parent-child adjacency
    int min_freq = 1;

    void validate() const;

    std::vector<size_t> resolve_global(size_t n) const;
};

}  // namespace sacc
