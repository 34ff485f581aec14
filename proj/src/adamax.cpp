#include "sacc/adamax.hpp"

#include <cmath>

#include "sacc/error.hpp"

namespace sacc {

Adamax::Adamax(std::vector<Value> params, double lr, double beta1, double beta2, double eps)
    : params_(std::move(params)), lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {
    for (const auto& p : params_) {
        if (!p->requires_grad) throw Error("missing_gradient", "optimizer parameter has no grad");
        m_.emplace_back(p->size(), 0.0);
        u_.emplace_back(p->size(), 0.0);
    }
}

void Adamax::step() {
    t_++;
    double bias_correction = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    double rate = lr_ / bias_correction;
    for (size_t k = 0; k < params_.size(); k++) {
        auto& p = *params_[k];
        auto& m = m_[k];
        auto& u = u_[k];
        for (size_t i = 0; i < p.size(); i++) {
            double g = p.grad[i];
            m[i] = beta1_ * m[i] + (1.0 - beta1_) * g;
            u[i] = std::max(beta2_ * u[i], std::abs(g));
            p.data[i] -= rate * m[i] / std::max(u[i], eps_);
        }
    }
}

void Adamax::zero_grad() {
    for (auto& p : params_) p->zero_grad();
}

}  // namespace sacc
