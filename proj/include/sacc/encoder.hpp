#pragma once

#include <string>
#include <vector>

#include "sacc/rng.hpp"
#include "sacc/tensor.hpp"
#include "sacc/treesplit.hpp"
#include "sacc/vocab.hpp"

namespace sacc {

// Recursive tree-encoder parameters: a token embedding table, one shared
// projection applied to every node's embedding, and a bias. Children's
// hidden states are summed, so the encoding is child-order invariant.
template <typename T>
struct EncoderParamsT {
    ValueT<T> token_embedding;  // |V| × d
    ValueT<T> node_proj;        // d × k
    ValueT<T> node_bias;        // 1 × k
};

using EncoderParams = EncoderParamsT<double>;

template <typename T>
void glorot_fill(const ValueT<T>& t, Rng& rng) {
    double bound = std::sqrt(6.0 / static_cast<double>(t->rows + t->cols));
    for (auto& v : t->data) v = static_cast<T>(rng.uniform(-bound, bound));
}

template <typename T>
EncoderParamsT<T> init_encoder_params(size_t vocab_size, size_t embed_dim, size_t hidden_dim,
                                      Rng& rng) {
    EncoderParamsT<T> params;
    params.token_embedding = make_tensor<T>(vocab_size, embed_dim, true);
    params.node_proj = make_tensor<T>(embed_dim, hidden_dim, true);
    params.node_bias = make_tensor<T>(1, hidden_dim, true);
    glorot_fill(params.token_embedding, rng);
    glorot_fill(params.node_proj, rng);
    return params;
}

// embedding row for one node token (the one-hot product collapses to a row
// lookup); unknown tokens map to the UNK row
template <typename T>
ValueT<T> embed_node(const std::string& token, const EncoderParamsT<T>& params,
                     const Vocabulary& vocab) {
    return gather_rows(params.token_embedding, {vocab.lookup(token)});
}

namespace detail {

template <typename T>
ValueT<T> node_hidden(const AstNode& node, const EncoderParamsT<T>& params,
                      const Vocabulary& vocab, std::vector<ValueT<T>>& all_hidden) {
    std::vector<ValueT<T>> terms;
    terms.push_back(matmul(embed_node(node_token(node), params, vocab), params.node_proj));
    for (const AstNode& child : node.children)
        terms.push_back(node_hidden(child, params, vocab, all_hidden));
    terms.push_back(params.node_bias);
    ValueT<T> h = tanh(add_n(terms));
    all_hidden.push_back(h);
    return h;
}

}  // namespace detail

// Bottom-up hidden states h(n) = tanh(proj(embed(n)) + sum of child h + bias),
// pooled with an elementwise max over all nodes. Returns a 1×k row.
template <typename T>
ValueT<T> encode_tree(const StatementTree& tree, const EncoderParamsT<T>& params,
                      const Vocabulary& vocab) {
    std::vector<ValueT<T>> hidden;
    detail::node_hidden(tree.nodes, params, vocab, hidden);
    return max_over_rows(concat_rows(hidden));
}

// Statement-tree rows stacked in sequence order: N×k.
template <typename T>
ValueT<T> encode_sequence(const StatementSequence& seq, const EncoderParamsT<T>& params,
                          const Vocabulary& vocab) {
    std::vector<ValueT<T>> rows;
    rows.reserve(seq.size());
    for (const auto& tree : seq.trees) rows.push_back(encode_tree(tree, params, vocab));
    return concat_rows(rows);
}

}  // namespace sacc
