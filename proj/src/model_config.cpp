#include "sacc/model_config.hpp"

#include "sacc/error.hpp"

namespace sacc {

void ModelConfig::validate() const {
    auto check = [](bool ok, const std::string& message) {
        if (!ok) throw Error("bad_config", message);
    };
    check(d_model > 0 && layers > 0 && heads > 0 && d_k > 0 && d_v > 0 && d_ff > 0,
          "model dimensions must be positive");
    check(heads * d_k == d_model, "heads * d_k must equal d_model");
    check(heads * d_v == d_model, "heads * d_v must equal d_model");
    check(d_model % 2 == 0, "d_model must be even for positional encoding");
    check(window >= 1 && window % 2 == 1, "window must be odd and >= 1");
    check(global_size >= 0, "global_size must be >= 0");
    check(dilated_gap >= 1, "dilated_gap must be >= 1");
    check(random_per_row >= 0, "random_per_row must be >= 0");
    check(pooling == "max", "only max pooling is supported");
    check(min_freq >= 1, "min_freq must be >= 1");
}

std::vector<size_t> ModelConfig::resolve_global(size_t n) const {
    std::vector<size_t> out;
    if (!global_indices.empty()) {
        for (size_t g : global_indices)
            if (g < n) out.push_back(g);
        return out;
    }
    for (size_t g = 0; g < static_cast<size_t>(global_size) && g < n; g++) out.push_back(g);
    return out;
}

}  // namespace sacc
