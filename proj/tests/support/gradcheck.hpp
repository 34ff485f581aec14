#pragma once

#include <functional>

#include "sacc/rng.hpp"
#include "sacc/tensor.hpp"

namespace sacc::testing {

// Central finite-difference gradient check. `forward` rebuilds the graph from
// the leaf tensors on every call; analytic grads from one backward pass are
// compared against (f(x+eps) - f(x-eps)) / 2eps per element.
// Relative error uses max(|analytic|, |numeric|, 1) as the denominator.
inline double gradcheck_max_rel_error(const std::vector<Value>& leaves,
                                      const std::function<Value()>& forward,
                                      double eps = 1e-5) {
    for (const auto& leaf : leaves) leaf->zero_grad();
    Value loss = forward();
    backward(loss);
    std::vector<std::vector<double>> analytic;
    for (const auto& leaf : leaves) analytic.push_back(leaf->grad);

    double worst = 0;
    for (size_t k = 0; k < leaves.size(); k++) {
        auto& leaf = leaves[k];
        for (size_t i = 0; i < leaf->size(); i++) {
            double saved = leaf->data[i];
            leaf->data[i] = saved + eps;
            double f_plus = forward()->value();
            leaf->data[i] = saved - eps;
            double f_minus = forward()->value();
            leaf->data[i] = saved;
            double numeric = (f_plus - f_minus) / (2 * eps);
            double a = analytic[k][i];
            double rel = std::abs(a - numeric) / std::max({std::abs(a), std::abs(numeric), 1.0});
            worst = std::max(worst, rel);
        }
    }
    return worst;
}

inline Value random_tensor(size_t rows, size_t cols, Rng& rng, bool requires_grad = true,
                           double lo = -1.0, double hi = 1.0) {
    auto t = make_tensor<double>(rows, cols, requires_grad);
    for (auto& v : t->data) v = rng.uniform(lo, hi);
    return t;
}

// random weighting tensor so reduced losses have non-uniform gradients
inline Value random_weights(size_t rows, size_t cols, Rng& rng) {
    return random_tensor(rows, cols, rng, false);
}

}  // namespace sacc::testing
