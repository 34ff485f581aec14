#pragma once

#include <vector>

#include "sacc/tensor.hpp"

namespace sacc {

// Adamax: m <- b1*m + (1-b1)*g; u <- max(b2*u, |g|);
// theta <- theta - (lr/(1-b1^t)) * m/u, with u floored at eps.
class Adamax {
public:
    Adamax(std::vector<Value> params, double lr, double beta1 = 0.9, double beta2 = 0.999,
           double eps = 1e-8);

    // applies one update from the accumulated grads; t increments once
    void step();
    void zero_grad();

    long steps() const { return t_; }

private:
    std::vector<Value> params_;
    std::vector<std::vector<double>> m_, u_;
    double lr_, beta1_, beta2_, eps_;
    long t_ = 0;
};

}  // namespace sacc
