#pragma once

#include <cmath>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "sacc/encoder.hpp"
#include "sacc/error.hpp"
#include "sacc/mask.hpp"
#include "sacc/model_config.hpp"
#include "sacc/tensor.hpp"

namespace sacc {

// Two interchangeable implementations of masked attention. The dense path
// materializes all N*N scores and masks the softmax; the gather path touches
// allowed pairs only. They must agree numerically — the equivalence test is
// the core correctness instrument for the sparse kernels.
enum class AttnPath { kSparse, kDense };

// Attention probabilities aligned with the mask rows (weights[i][p] belongs
// to column mask.row(i)[p]); disallowed pairs are implicitly zero.
template <typename T>
struct AttentionWeights {
    size_t n = 0;
    std::vector<std::vector<T>> rows;

    std::vector<T> to_dense(const AttentionMask& mask) const {
        std::vector<T> dense(n * n, T(0));
        for (size_t i = 0; i < n; i++)
            for (size_t p = 0; p < mask.row(i).size(); p++) dense[i * n + mask.row(i)[p]] = rows[i][p];
        return dense;
    }
};

template <typename T>
struct LayerParamsT {
    std::vector<ValueT<T>> wq, wk, wv;  // per head: d_model×d_k (d_v for wv)
    ValueT<T> wo;                       // (heads·d_v)×d_model
    ValueT<T> ffn_w1, ffn_b1, ffn_w2, ffn_b2;
    ValueT<T> ln1_gain, ln1_bias, ln2_gain, ln2_bias;
};

template <typename T>
struct ModelParamsT {
    EncoderParamsT<T> encoder;
    std::vector<LayerParamsT<T>> layers;
    ValueT<T> out_proj;  // d_model×P
    ValueT<T> out_bias;  // 1×P

    // stable name/tensor listing, the checkpoint manifest order
    std::vector<std::pair<std::string, ValueT<T>>> named_tensors() const {
        std::vector<std::pair<std::string, ValueT<T>>> all;
        all.emplace_back("encoder.token_embedding", encoder.token_embedding);
        all.emplace_back("encoder.node_proj", encoder.node_proj);
        all.emplace_back("encoder.node_bias", encoder.node_bias);
        for (size_t l = 0; l < layers.size(); l++) {
            const auto& layer = layers[l];
            std::string prefix = "layer" + std::to_string(l) + ".";
            for (size_t h = 0; h < layer.wq.size(); h++) {
                std::string head = "head" + std::to_string(h) + ".";
                all.emplace_back(prefix + head + "wq", layer.wq[h]);
                all.emplace_back(prefix + head + "wk", layer.wk[h]);
                all.emplace_back(prefix + head + "wv", layer.wv[h]);
            }
            all.emplace_back(prefix + "wo", layer.wo);
            all.emplace_back(prefix + "ffn_w1", layer.ffn_w1);
            all.emplace_back(prefix + "ffn_b1", layer.ffn_b1);
            all.emplace_back(prefix + "ffn_w2", layer.ffn_w2);
            all.emplace_back(prefix + "ffn_b2", layer.ffn_b2);
            all.emplace_back(prefix + "ln1_gain", layer.ln1_gain);
            all.emplace_back(prefix + "ln1_bias", layer.ln1_bias);
            all.emplace_back(prefix + "ln2_gain", layer.ln2_gain);
            all.emplace_back(prefix + "ln2_bias", layer.ln2_bias);
        }
        all.emplace_back("out_proj", out_proj);
        all.emplace_back("out_bias", out_bias);
        return all;
    }
};

using LayerParams = LayerParamsT<double>;
using ModelParams = ModelParamsT<double>;

template <typename T>
LayerParamsT<T> init_layer_params(const ModelConfig& config, Rng& rng) {
    LayerParamsT<T> layer;
    size_t d = static_cast<size_t>(config.d_model);
    size_t dk = static_cast<size_t>(config.d_k);
    size_t dv = static_cast<size_t>(config.d_v);
    size_t dff = static_cast<size_t>(config.d_ff);
    for (int h = 0; h < config.heads; h++) {
        layer.wq.push_back(make_tensor<T>(d, dk, true));
        layer.wk.push_back(make_tensor<T>(d, dk, true));
        layer.wv.push_back(make_tensor<T>(d, dv, true));
        glorot_fill(layer.wq.back(), rng);
        glorot_fill(layer.wk.back(), rng);
        glorot_fill(layer.wv.back(), rng);
    }
    layer.wo = make_tensor<T>(static_cast<size_t>(config.heads) * dv, d, true);
    layer.ffn_w1 = make_tensor<T>(d, dff, true);
    layer.ffn_b1 = make_tensor<T>(1, dff, true);
    layer.ffn_w2 = make_tensor<T>(dff, d, true);
    layer.ffn_b2 = make_tensor<T>(1, d, true);
    glorot_fill(layer.wo, rng);
    glorot_fill(layer.ffn_w1, rng);
    glorot_fill(layer.ffn_w2, rng);
    layer.ln1_gain = make_tensor<T>(1, d, true);
    layer.ln1_bias = make_tensor<T>(1, d, true);
    layer.ln2_gain = make_tensor<T>(1, d, true);
    layer.ln2_bias = make_tensor<T>(1, d, true);
    std::fill(layer.ln1_gain->data.begin(), layer.ln1_gain->data.end(), T(1));
    std::fill(layer.ln2_gain->data.begin(), layer.ln2_gain->data.end(), T(1));
    return layer;
}

template <typename T>
ModelParamsT<T> init_model_params(const ModelConfig& config, size_t vocab_size, uint64_t seed) {
    config.validate();
    if (config.num_classes < 2) throw Error("bad_config", "num_classes must be >= 2");
    Rng rng(seed);
    ModelParamsT<T> params;
    params.encoder = init_encoder_params<T>(vocab_size, static_cast<size_t>(config.d_model),
                                            static_cast<size_t>(config.d_model), rng);
    for (int l = 0; l < config.layers; l++) params.layers.push_back(init_layer_params<T>(config, rng));
    params.out_proj = make_tensor<T>(static_cast<size_t>(config.d_model),
                                     static_cast<size_t>(config.num_classes), true);
    params.out_bias = make_tensor<T>(1, static_cast<size_t>(config.num_classes), true);
    glorot_fill(params.out_proj, rng);
    return params;
}

// sin/cos positional encoding rows, added to E before the first layer
template <typename T>
ValueT<T> positional_encoding(size_t n, size_t d_model) {
    if (d_model % 2 != 0) throw Error("odd_dimension", "positional encoding needs even d_model");
    auto pe = make_tensor<T>(n, d_model, false);
    for (size_t pos = 0; pos < n; pos++) {
        for (size_t i = 0; i < d_model / 2; i++) {
            double angle = static_cast<double>(pos) /
                           std::pow(10000.0, 2.0 * static_cast<double>(i) / static_cast<double>(d_model));
            pe->at(pos, 2 * i) = static_cast<T>(std::sin(angle));
            pe->at(pos, 2 * i + 1) = static_cast<T>(std::cos(angle));
        }
    }
    return pe;
}

// Fused gather-based attention: scores, softmax, and the weighted sum touch
// allowed pairs only, forward and backward.
template <typename T>
ValueT<T> sparse_gather_attention(const ValueT<T>& q, const ValueT<T>& k, const ValueT<T>& v,
                                  const AttentionMask& mask, AttentionWeights<T>* weights_out = nullptr) {
    size_t n = q->rows;
    size_t dk = q->cols;
    size_t dv = v->cols;
    detail::require(k->rows == n && v->rows == n && k->cols == dk && mask.n() == n,
                    "shape_mismatch", "attention operand shapes disagree");
    T inv_scale = T(1) / static_cast<T>(std::sqrt(static_cast<double>(dk)));

    auto out = detail::op_result<T>(n, dv, {q, k, v});
    auto probs = std::make_shared<std::vector<std::vector<T>>>(n);
    for (size_t i = 0; i < n; i++) {
        const auto& allowed = mask.row(i);
        auto& p = (*probs)[i];
        p.resize(allowed.size());
        const T* qi = q->data.data() + i * dk;
        T mx = -std::numeric_limits<T>::infinity();
        for (size_t pos = 0; pos < allowed.size(); pos++) {
            const T* kj = k->data.data() + allowed[pos] * dk;
            T dot = 0;
            for (size_t c = 0; c < dk; c++) dot += qi[c] * kj[c];
            p[pos] = dot * inv_scale;
            if (p[pos] > mx) mx = p[pos];
        }
        T z = 0;
        for (auto& val : p) {
            val = std::exp(val - mx);
            z += val;
        }
        for (auto& val : p) val /= z;
        T* orow = out->data.data() + i * dv;
        for (size_t pos = 0; pos < allowed.size(); pos++) {
            const T* vj = v->data.data() + allowed[pos] * dv;
            T w = p[pos];
            for (size_t c = 0; c < dv; c++) orow[c] += w * vj[c];
        }
    }
    if (weights_out) {
        weights_out->n = n;
        weights_out->rows = *probs;
    }
    if (out->requires_grad) {
        auto* qp = q.get();
        auto* kp = k.get();
        auto* vp = v.get();
        auto* op = out.get();
        // the closure owns a copy of the mask; backward may run after the
        // caller's mask went out of scope
        auto mask_copy = std::make_shared<const AttentionMask>(mask);
        out->backward_fn = [qp, kp, vp, op, mp = std::move(mask_copy), probs, inv_scale] {
            size_t n = qp->rows;
            size_t dk = qp->cols;
            size_t dv = vp->cols;
            std::vector<T> dscore;
            for (size_t i = 0; i < n; i++) {
                const auto& allowed = mp->row(i);
                const auto& p = (*probs)[i];
                const T* dout = op->grad.data() + i * dv;
                dscore.assign(allowed.size(), T(0));
                // dP[i][j] = dOut[i] . V[j]; dS = softmax backward within the row
                T dot_p_dp = 0;
                for (size_t pos = 0; pos < allowed.size(); pos++) {
                    const T* vj = vp->data.data() + allowed[pos] * dv;
                    T dp = 0;
                    for (size_t c = 0; c < dv; c++) dp += dout[c] * vj[c];
                    dscore[pos] = dp;
                    dot_p_dp += p[pos] * dp;
                }
                for (size_t pos = 0; pos < allowed.size(); pos++)
                    dscore[pos] = p[pos] * (dscore[pos] - dot_p_dp) * inv_scale;

                const T* qi = qp->data.data() + i * dk;
                T* dqi = qp->requires_grad ? qp->grad.data() + i * dk : nullptr;
                for (size_t pos = 0; pos < allowed.size(); pos++) {
                    size_t j = allowed[pos];
                    T ds = dscore[pos];
                    if (dqi) {
                        const T* kj = kp->data.data() + j * dk;
                        for (size_t c = 0; c < dk; c++) dqi[c] += ds * kj[c];
                    }
                    if (kp->requires_grad) {
                        T* dkj = kp->grad.data() + j * dk;
                        for (size_t c = 0; c < dk; c++) dkj[c] += ds * qi[c];
                    }
                    if (vp->requires_grad) {
                        T* dvj = vp->grad.data() + j * dv;
                        T w = p[pos];
                        for (size_t c = 0; c < dv; c++) dvj[c] += w * dout[c];
                    }
                }
            }
        };
    }
    return out;
}

// Reference path: all N*N scores, masked softmax, dense weighted sum.
template <typename T>
ValueT<T> dense_masked_attention(const ValueT<T>& q, const ValueT<T>& k, const ValueT<T>& v,
                                 const AttentionMask& mask, AttentionWeights<T>* weights_out = nullptr) {
    size_t n = q->rows;
    detail::require(k->rows == n && v->rows == n && k->cols == q->cols && mask.n() == n,
                    "shape_mismatch", "attention operand shapes disagree");
    T inv_scale = T(1) / static_cast<T>(std::sqrt(static_cast<double>(q->cols)));
    auto scores = scale(matmul(q, transpose(k)), inv_scale);
    auto weights = softmax_rows_masked(scores, mask.dense());
    if (weights_out) {
        weights_out->n = n;
        weights_out->rows.assign(n, {});
        for (size_t i = 0; i < n; i++)
            for (uint32_t j : mask.row(i)) weights_out->rows[i].push_back(weights->at(i, j));
    }
    return matmul(weights, v);
}

template <typename T>
ValueT<T> masked_attention(const ValueT<T>& q, const ValueT<T>& k, const ValueT<T>& v,
                           const AttentionMask& mask, AttnPath path,
                           AttentionWeights<T>* weights_out = nullptr) {
    return path == AttnPath::kSparse ? sparse_gather_attention(q, k, v, mask, weights_out)
                                     : dense_masked_attention(q, k, v, mask, weights_out);
}

// per-head projections, shared mask, concat, output projection
template <typename T>
ValueT<T> multi_head(const ValueT<T>& x, const LayerParamsT<T>& layer, const AttentionMask& mask,
                     AttnPath path, std::vector<AttentionWeights<T>>* head_weights = nullptr) {
    std::vector<ValueT<T>> heads;
    for (size_t h = 0; h < layer.wq.size(); h++) {
        AttentionWeights<T>* wout = nullptr;
        if (head_weights) {
            head_weights->emplace_back();
            wout = &head_weights->back();
        }
        heads.push_back(masked_attention(matmul(x, layer.wq[h]), matmul(x, layer.wk[h]),
                                         matmul(x, layer.wv[h]), mask, path, wout));
    }
    return matmul(concat_columns(heads), layer.wo);
}

template <typename T>
ValueT<T> feed_forward(const ValueT<T>& x, const LayerParamsT<T>& layer) {
    auto hidden = relu(add_bias(matmul(x, layer.ffn_w1), layer.ffn_b1));
    return add_bias(matmul(hidden, layer.ffn_w2), layer.ffn_b2);
}

// Post-norm encoder layer: LN(x + MH(x)), then LN(y + FFN(y)).
template <typename T>
ValueT<T> encoder_layer(const ValueT<T>& x, const LayerParamsT<T>& layer,
                        const AttentionMask& mask, AttnPath path,
                        std::vector<AttentionWeights<T>>* head_weights = nullptr) {
    auto attended = layer_norm(add(x, multi_head(x, layer, mask, path, head_weights)),
                               layer.ln1_gain, layer.ln1_bias);
    return layer_norm(add(attended, feed_forward(attended, layer)), layer.ln2_gain,
                      layer.ln2_bias);
}

// attention weights per layer, per head, recorded when a trace is requested
template <typename T>
struct AttnTraceT {
    std::vector<std::vector<AttentionWeights<T>>> layers;
};

using AttnTrace = AttnTraceT<double>;

template <typename T>
ValueT<T> encoder_stack(const ValueT<T>& embedded, const ModelParamsT<T>& params,
                        const AttentionMask& mask, AttnPath path,
                        AttnTraceT<T>* trace = nullptr) {
    auto x = add(embedded, positional_encoding<T>(embedded->rows, embedded->cols));
    for (const auto& layer : params.layers) {
        std::vector<AttentionWeights<T>>* head_weights = nullptr;
        if (trace) {
            trace->layers.emplace_back();
            head_weights = &trace->layers.back();
        }
        x = encoder_layer(x, layer, mask, path, head_weights);
    }
    return x;
}

// max-pool over the first valid_len rows, then project to class logits (1×P)
template <typename T>
ValueT<T> classify(const ValueT<T>& stack_out, size_t valid_len, const ModelParamsT<T>& params) {
    if (valid_len == 0) throw Error("zero_length", "cannot pool an empty sequence");
    detail::require(valid_len <= stack_out->rows, "shape_mismatch",
                    "valid length exceeds sequence length");
    auto pooled = valid_len == stack_out->rows ? max_over_rows(stack_out)
                                               : max_over_rows(slice_rows(stack_out, 0, valid_len));
    return add_bias(matmul(pooled, params.out_proj), params.out_bias);
}

}  // namespace sacc
