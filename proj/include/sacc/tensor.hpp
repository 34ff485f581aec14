#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "sacc/error.hpp"

namespace sacc {

// Reverse-mode autodiff over row-major 2-D tensors. Every op records its
// parents and a pull-style backward closure; backward(loss) walks the graph
// in reverse topological order. A graph is confined to one logical thread
// from forward through backward.
template <typename T>
struct TensorT {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<T> data;
    std::vector<T> grad;  // same shape, allocated when requires_grad
    bool requires_grad = false;
    std::vector<std::shared_ptr<TensorT>> parents;
    std::function<void()> backward_fn;

    size_t size() const { return rows * cols; }
    T& at(size_t r, size_t c) { return data[r * cols + c]; }
    T at(size_t r, size_t c) const { return data[r * cols + c]; }
    T& grad_at(size_t r, size_t c) { return grad[r * cols + c]; }

    // scalar convenience
    T value() const { return data[0]; }

    void zero_grad() { std::fill(grad.begin(), grad.end(), T(0)); }
};

template <typename T>
using ValueT = std::shared_ptr<TensorT<T>>;

using Tensor = TensorT<double>;
using Value = ValueT<double>;

namespace detail {

inline void require(bool cond, const char* kind, const std::string& message) {
    if (!cond) throw Error(kind, message);
}

}  // namespace detail

template <typename T>
ValueT<T> make_tensor(size_t rows, size_t cols, bool requires_grad) {
    detail::require(rows > 0 && cols > 0, "shape_mismatch", "tensor extents must be positive");
    auto t = std::make_shared<TensorT<T>>();
    t->rows = rows;
    t->cols = cols;
    t->data.assign(rows * cols, T(0));
    t->requires_grad = requires_grad;
    if (requires_grad) t->grad.assign(rows * cols, T(0));
    return t;
}

template <typename T>
ValueT<T> make_tensor(size_t rows, size_t cols, std::initializer_list<T> values,
                      bool requires_grad = false) {
    auto t = make_tensor<T>(rows, cols, requires_grad);
    detail::require(values.size() == t->size(), "shape_mismatch", "initializer size mismatch");
    std::copy(values.begin(), values.end(), t->data.begin());
    return t;
}

namespace detail {

// C += A·B with optional logical transposes. Inner loops run with unit
// stride; the streaming variants process four rows of the stationary operand
// per pass so each row of the streamed operand is read once per four updates.
template <typename T>
void gemm_acc(const T* a, size_t ar, size_t ac, bool ta, const T* b, size_t br, size_t bc, bool tb,
              T* c) {
    size_t m = ta ? ac : ar;
    size_t k = ta ? ar : ac;
    size_t n = tb ? br : bc;
    detail::require((tb ? bc : br) == k, "shape_mismatch", "gemm inner extents differ");
    if (!ta && !tb) {
        size_t i = 0;
        for (; i + 4 <= m; i += 4) {
            for (size_t p = 0; p < k; p++) {
                T a0 = a[i * k + p], a1 = a[(i + 1) * k + p];
                T a2 = a[(i + 2) * k + p], a3 = a[(i + 3) * k + p];
                const T* brow = b + p * n;
                T* c0 = c + i * n;
                T* c1 = c0 + n;
                T* c2 = c1 + n;
                T* c3 = c2 + n;
                for (size_t j = 0; j < n; j++) {
                    T bv = brow[j];
                    c0[j] += a0 * bv;
                    c1[j] += a1 * bv;
                    c2[j] += a2 * bv;
                    c3[j] += a3 * bv;
                }
            }
        }
        for (; i < m; i++)
            for (size_t p = 0; p < k; p++) {
                T av = a[i * k + p];
                const T* brow = b + p * n;
                T* crow = c + i * n;
                for (size_t j = 0; j < n; j++) crow[j] += av * brow[j];
            }
    } else if (!ta && tb) {
        for (size_t i = 0; i < m; i++) {
            const T* arow = a + i * k;
            size_t j = 0;
            for (; j + 4 <= n; j += 4) {
                const T* b0 = b + j * k;
                const T* b1 = b0 + k;
                const T* b2 = b1 + k;
                const T* b3 = b2 + k;
                T s0 = 0, s1 = 0, s2 = 0, s3 = 0;
                for (size_t p = 0; p < k; p++) {
                    T av = arow[p];
                    s0 += av * b0[p];
                    s1 += av * b1[p];
                    s2 += av * b2[p];
                    s3 += av * b3[p];
                }
                c[i * n + j] += s0;
                c[i * n + j + 1] += s1;
                c[i * n + j + 2] += s2;
                c[i * n + j + 3] += s3;
            }
            for (; j < n; j++) {
                const T* brow = b + j * k;
                T acc = 0;
                for (size_t p = 0; p < k; p++) acc += arow[p] * brow[p];
                c[i * n + j] += acc;
            }
        }
    } else if (ta && !tb) {
        size_t p = 0;
        for (; p + 4 <= k; p += 4) {
            for (size_t i = 0; i < m; i++) {
                T a0 = a[p * m + i], a1 = a[(p + 1) * m + i];
                T a2 = a[(p + 2) * m + i], a3 = a[(p + 3) * m + i];
                const T* b0 = b + p * n;
                const T* b1 = b0 + n;
                const T* b2 = b1 + n;
                const T* b3 = b2 + n;
                T* crow = c + i * n;
                for (size_t j = 0; j < n; j++)
                    crow[j] += a0 * b0[j] + a1 * b1[j] + a2 * b2[j] + a3 * b3[j];
            }
        }
        for (; p < k; p++)
            for (size_t i = 0; i < m; i++) {
                T av = a[p * m + i];
                const T* brow = b + p * n;
                T* crow = c + i * n;
                for (size_t j = 0; j < n; j++) crow[j] += av * brow[j];
            }
    } else {
        for (size_t i = 0; i < m; i++)
            for (size_t j = 0; j < n; j++) {
                T acc = 0;
                for (size_t p = 0; p < k; p++) acc += a[p * m + i] * b[j * k + p];
                c[i * n + j] += acc;
            }
    }
}

template <typename T>
ValueT<T> op_result(size_t rows, size_t cols, std::vector<ValueT<T>> parents) {
    bool needs_grad = false;
    for (const auto& p : parents) needs_grad = needs_grad || p->requires_grad;
    auto out = make_tensor<T>(rows, cols, needs_grad);
    if (needs_grad) out->parents = std::move(parents);
    return out;
}

}  // namespace detail

template <typename T>
ValueT<T> matmul(const ValueT<T>& a, const ValueT<T>& b) {
    detail::require(a->cols == b->rows, "shape_mismatch", "matmul inner extents differ");
    auto out = detail::op_result<T>(a->rows, b->cols, {a, b});
    detail::gemm_acc(a->data.data(), a->rows, a->cols, false, b->data.data(), b->rows, b->cols,
                     false, out->data.data());
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* bp = b.get();
        auto* op = out.get();
        out->backward_fn = [ap, bp, op] {
            if (ap->requires_grad)
                detail::gemm_acc(op->grad.data(), op->rows, op->cols, false, bp->data.data(),
                                 bp->rows, bp->cols, true, ap->grad.data());
            if (bp->requires_grad)
                detail::gemm_acc(ap->data.data(), ap->rows, ap->cols, true, op->grad.data(),
                                 op->rows, op->cols, false, bp->grad.data());
        };
    }
    return out;
}

template <typename T>
ValueT<T> transpose(const ValueT<T>& a) {
    auto out = detail::op_result<T>(a->cols, a->rows, {a});
    for (size_t i = 0; i < a->rows; i++)
        for (size_t j = 0; j < a->cols; j++) out->at(j, i) = a->at(i, j);
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* op = out.get();
        out->backward_fn = [ap, op] {
            for (size_t i = 0; i < ap->rows; i++)
                for (size_t j = 0; j < ap->cols; j++) ap->grad_at(i, j) += op->grad[j * op->cols + i];
        };
    }
    return out;
}

template <typename T>
ValueT<T> add(const ValueT<T>& a, const ValueT<T>& b) {
    detail::require(a->rows == b->rows && a->cols == b->cols, "shape_mismatch",
                    "add operands differ in shape");
    auto out = detail::op_result<T>(a->rows, a->cols, {a, b});
    for (size_t i = 0; i < out->size(); i++) out->data[i] = a->data[i] + b->data[i];
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* bp = b.get();
        auto* op = out.get();
        out->backward_fn = [ap, bp, op] {
            if (ap->requires_grad)
                for (size_t i = 0; i < op->size(); i++) ap->grad[i] += op->grad[i];
            if (bp->requires_grad)
                for (size_t i = 0; i < op->size(); i++) bp->grad[i] += op->grad[i];
        };
    }
    return out;
}

// A (m×n) + bias row (1×n), broadcast over the leading axis
template <typename T>
ValueT<T> add_bias(const ValueT<T>& a, const ValueT<T>& bias) {
    detail::require(bias->rows == 1 && bias->cols == a->cols, "shape_mismatch",
                    "bias must be a 1×cols row");
    auto out = detail::op_result<T>(a->rows, a->cols, {a, bias});
    for (size_t i = 0; i < a->rows; i++)
        for (size_t j = 0; j < a->cols; j++) out->at(i, j) = a->at(i, j) + bias->data[j];
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* bp = bias.get();
        auto* op = out.get();
        out->backward_fn = [ap, bp, op] {
            if (ap->requires_grad)
                for (size_t i = 0; i < op->size(); i++) ap->grad[i] += op->grad[i];
            if (bp->requires_grad)
                for (size_t i = 0; i < op->rows; i++)
                    for (size_t j = 0; j < op->cols; j++) bp->grad[j] += op->grad[i * op->cols + j];
        };
    }
    return out;
}

template <typename T>
ValueT<T> add_n(const std::vector<ValueT<T>>& terms) {
    detail::require(!terms.empty(), "shape_mismatch", "add_n needs at least one term");
    for (const auto& t : terms)
        detail::require(t->rows == terms[0]->rows && t->cols == terms[0]->cols, "shape_mismatch",
                        "add_n operands differ in shape");
    auto out = detail::op_result<T>(terms[0]->rows, terms[0]->cols, {terms.begin(), terms.end()});
    for (const auto& t : terms)
        for (size_t i = 0; i < out->size(); i++) out->data[i] += t->data[i];
    if (out->requires_grad) {
        auto* op = out.get();
        std::vector<TensorT<T>*> raw;
        for (const auto& t : terms) raw.push_back(t.get());
        out->backward_fn = [raw, op] {
            for (auto* t : raw)
                if (t->requires_grad)
                    for (size_t i = 0; i < op->size(); i++) t->grad[i] += op->grad[i];
        };
    }
    return out;
}

template <typename T>
ValueT<T> add_n(std::initializer_list<ValueT<T>> terms) {
    return add_n(std::vector<ValueT<T>>(terms));
}

template <typename T>
ValueT<T> mul(const ValueT<T>& a, const ValueT<T>& b) {
    detail::require(a->rows == b->rows && a->cols == b->cols, "shape_mismatch",
                    "mul operands differ in shape");
    auto out = detail::op_result<T>(a->rows, a->cols, {a, b});
    for (size_t i = 0; i < out->size(); i++) out->data[i] = a->data[i] * b->data[i];
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* bp = b.get();
        auto* op = out.get();
        out->backward_fn = [ap, bp, op] {
            if (ap->requires_grad)
                for (size_t i = 0; i < op->size(); i++) ap->grad[i] += op->grad[i] * bp->data[i];
            if (bp->requires_grad)
                for (size_t i = 0; i < op->size(); i++) bp->grad[i] += op->grad[i] * ap->data[i];
        };
    }
    return out;
}

template <typename T>
ValueT<T> scale(const ValueT<T>& a, T c) {
    auto out = detail::op_result<T>(a->rows, a->cols, {a});
    for (size_t i = 0; i < out->size(); i++) out->data[i] = a->data[i] * c;
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* op = out.get();
        out->backward_fn = [ap, op, c] {
            for (size_t i = 0; i < op->size(); i++) ap->grad[i] += op->grad[i] * c;
        };
    }
    return out;
}

template <typename T>
ValueT<T> tanh(const ValueT<T>& a) {
    auto out = detail::op_result<T>(a->rows, a->cols, {a});
    for (size_t i = 0; i < out->size(); i++) out->data[i] = std::tanh(a->data[i]);
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* op = out.get();
        out->backward_fn = [ap, op] {
            for (size_t i = 0; i < op->size(); i++)
                ap->grad[i] += op->grad[i] * (T(1) - op->data[i] * op->data[i]);
        };
    }
    return out;
}

template <typename T>
ValueT<T> relu(const ValueT<T>& a) {
    auto out = detail::op_result<T>(a->rows, a->cols, {a});
    for (size_t i = 0; i < out->size(); i++) out->data[i] = a->data[i] > T(0) ? a->data[i] : T(0);
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* op = out.get();
        out->backward_fn = [ap, op] {
            for (size_t i = 0; i < op->size(); i++)
                if (ap->data[i] > T(0)) ap->grad[i] += op->grad[i];
        };
    }
    return out;
}

template <typename T>
ValueT<T> concat_columns(const std::vector<ValueT<T>>& parts) {
    detail::require(!parts.empty(), "shape_mismatch", "concat_columns needs at least one part");
    size_t rows = parts[0]->rows;
    size_t cols = 0;
    for (const auto& p : parts) {
        detail::require(p->rows == rows, "shape_mismatch", "concat_columns rows differ");
        cols += p->cols;
    }
    auto out = detail::op_result<T>(rows, cols, {parts.begin(), parts.end()});
    size_t offset = 0;
    for (const auto& p : parts) {
        for (size_t i = 0; i < rows; i++)
            std::copy(p->data.begin() + i * p->cols, p->data.begin() + (i + 1) * p->cols,
                      out->data.begin() + i * cols + offset);
        offset += p->cols;
    }
    if (out->requires_grad) {
        auto* op = out.get();
        std::vector<TensorT<T>*> raw;
        for (const auto& p : parts) raw.push_back(p.get());
        out->backward_fn = [raw, op] {
            size_t off = 0;
            for (auto* p : raw) {
                if (p->requires_grad)
                    for (size_t i = 0; i < p->rows; i++)
                        for (size_t j = 0; j < p->cols; j++)
                            p->grad[i * p->cols + j] += op->grad[i * op->cols + off + j];
                off += p->cols;
            }
        };
    }
    return out;
}

template <typename T>
ValueT<T> concat_rows(const std::vector<ValueT<T>>& parts) {
    detail::require(!parts.empty(), "shape_mismatch", "concat_rows needs at least one part");
    size_t cols = parts[0]->cols;
    size_t rows = 0;
    for (const auto& p : parts) {
        detail::require(p->cols == cols, "shape_mismatch", "concat_rows cols differ");
        rows += p->rows;
    }
    auto out = detail::op_result<T>(rows, cols, {parts.begin(), parts.end()});
    size_t offset = 0;
    for (const auto& p : parts) {
        std::copy(p->data.begin(), p->data.end(), out->data.begin() + offset);
        offset += p->size();
    }
    if (out->requires_grad) {
        auto* op = out.get();
        std::vector<TensorT<T>*> raw;
        for (const auto& p : parts) raw.push_back(p.get());
        out->backward_fn = [raw, op] {
            size_t off = 0;
            for (auto* p : raw) {
                if (p->requires_grad)
                    for (size_t i = 0; i < p->size(); i++) p->grad[i] += op->grad[off + i];
                off += p->size();
            }
        };
    }
    return out;
}

template <typename T>
ValueT<T> concat_columns(std::initializer_list<ValueT<T>> parts) {
    return concat_columns(std::vector<ValueT<T>>(parts));
}

template <typename T>
ValueT<T> concat_rows(std::initializer_list<ValueT<T>> parts) {
    return concat_rows(std::vector<ValueT<T>>(parts));
}

template <typename T>
ValueT<T> slice_rows(const ValueT<T>& a, size_t r0, size_t r1) {
    detail::require(r0 < r1 && r1 <= a->rows, "shape_mismatch", "slice_rows range out of bounds");
    auto out = detail::op_result<T>(r1 - r0, a->cols, {a});
    std::copy(a->data.begin() + r0 * a->cols, a->data.begin() + r1 * a->cols, out->data.begin());
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* op = out.get();
        out->backward_fn = [ap, op, r0] {
            for (size_t i = 0; i < op->size(); i++) ap->grad[r0 * ap->cols + i] += op->grad[i];
        };
    }
    return out;
}

// Embedding-style row lookup; gradient accumulates into the table rows.
template <typename T>
ValueT<T> gather_rows(const ValueT<T>& table, std::vector<int> indices) {
    detail::require(!indices.empty(), "shape_mismatch", "gather_rows needs at least one index");
    for (int idx : indices)
        detail::require(idx >= 0 && static_cast<size_t>(idx) < table->rows, "shape_mismatch",
                        "gather_rows index out of range");
    auto out = detail::op_result<T>(indices.size(), table->cols, {table});
    for (size_t r = 0; r < indices.size(); r++)
        std::copy(table->data.begin() + indices[r] * table->cols,
                  table->data.begin() + (indices[r] + 1) * table->cols,
                  out->data.begin() + r * table->cols);
    if (out->requires_grad) {
        auto* tp = table.get();
        auto* op = out.get();
        out->backward_fn = [tp, op, indices = std::move(indices)] {
            for (size_t r = 0; r < indices.size(); r++)
                for (size_t j = 0; j < op->cols; j++)
                    tp->grad[indices[r] * tp->cols + j] += op->grad[r * op->cols + j];
        };
    }
    return out;
}

// Column-wise max over the row axis: out is 1×cols. Gradient routes to the
// first argmax row on ties.
template <typename T>
ValueT<T> max_over_rows(const ValueT<T>& a) {
    detail::require(a->rows > 0, "empty_reduction", "max_over_rows on zero rows");
    auto out = detail::op_result<T>(1, a->cols, {a});
    std::vector<size_t> argmax(a->cols, 0);
    for (size_t j = 0; j < a->cols; j++) {
        T best = a->at(0, j);
        for (size_t i = 1; i < a->rows; i++) {
            if (a->at(i, j) > best) {
                best = a->at(i, j);
                argmax[j] = i;
            }
        }
        out->data[j] = best;
    }
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* op = out.get();
        out->backward_fn = [ap, op, argmax = std::move(argmax)] {
            for (size_t j = 0; j < op->cols; j++) ap->grad[argmax[j] * ap->cols + j] += op->grad[j];
        };
    }
    return out;
}

// Row-wise layer normalization with learned gain/bias rows.
template <typename T>
ValueT<T> layer_norm(const ValueT<T>& a, const ValueT<T>& gain, const ValueT<T>& bias,
                     T eps = T(1e-5)) {
    detail::require(gain->rows == 1 && gain->cols == a->cols && bias->rows == 1 &&
                        bias->cols == a->cols,
                    "shape_mismatch", "layer_norm gain/bias must be 1×cols");
    auto out = detail::op_result<T>(a->rows, a->cols, {a, gain, bias});
    size_t n = a->cols;
    std::vector<T> inv_std(a->rows), normalized(a->size());
    for (size_t i = 0; i < a->rows; i++) {
        const T* row = a->data.data() + i * n;
        T mean = 0;
        for (size_t j = 0; j < n; j++) mean += row[j];
        mean /= T(n);
        T var = 0;
        for (size_t j = 0; j < n; j++) var += (row[j] - mean) * (row[j] - mean);
        var /= T(n);
        T inv = T(1) / std::sqrt(var + eps);
        inv_std[i] = inv;
        for (size_t j = 0; j < n; j++) {
            T xhat = (row[j] - mean) * inv;
            normalized[i * n + j] = xhat;
            out->data[i * n + j] = gain->data[j] * xhat + bias->data[j];
        }
    }
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* gp = gain.get();
        auto* bp = bias.get();
        auto* op = out.get();
        out->backward_fn = [ap, gp, bp, op, inv_std = std::move(inv_std),
                            normalized = std::move(normalized)] {
            size_t cols = ap->cols;
            for (size_t i = 0; i < ap->rows; i++) {
                const T* dy = op->grad.data() + i * cols;
                const T* xhat = normalized.data() + i * cols;
                T mean_dxhat = 0, mean_dxhat_xhat = 0;
                for (size_t j = 0; j < cols; j++) {
                    T dxhat = dy[j] * gp->data[j];
                    mean_dxhat += dxhat;
                    mean_dxhat_xhat += dxhat * xhat[j];
                }
                mean_dxhat /= T(cols);
                mean_dxhat_xhat /= T(cols);
                if (ap->requires_grad) {
                    T* dx = ap->grad.data() + i * cols;
                    for (size_t j = 0; j < cols; j++) {
                        T dxhat = dy[j] * gp->data[j];
                        dx[j] += inv_std[i] * (dxhat - mean_dxhat - xhat[j] * mean_dxhat_xhat);
                    }
                }
                if (gp->requires_grad)
                    for (size_t j = 0; j < cols; j++) gp->grad[j] += dy[j] * xhat[j];
                if (bp->requires_grad)
                    for (size_t j = 0; j < cols; j++) bp->grad[j] += dy[j];
            }
        };
    }
    return out;
}

// Softmax per row over allowed entries only; masked-out entries are exactly
// zero and carry zero gradient. A fully masked row yields all zeros.
template <typename T>
ValueT<T> softmax_rows_masked(const ValueT<T>& a, std::vector<uint8_t> mask) {
    detail::require(mask.size() == a->size(), "shape_mismatch",
                    "mask must match the tensor shape");
    auto out = detail::op_result<T>(a->rows, a->cols, {a});
    size_t cols = a->cols;
    for (size_t i = 0; i < a->rows; i++) {
        const T* row = a->data.data() + i * cols;
        const uint8_t* m = mask.data() + i * cols;
        T mx = -std::numeric_limits<T>::infinity();
        for (size_t j = 0; j < cols; j++)
            if (m[j] && row[j] > mx) mx = row[j];
        if (mx == -std::numeric_limits<T>::infinity()) continue;  // fully masked row
        T z = 0;
        T* orow = out->data.data() + i * cols;
        for (size_t j = 0; j < cols; j++) {
            if (m[j]) {
                orow[j] = std::exp(row[j] - mx);
                z += orow[j];
            }
        }
        for (size_t j = 0; j < cols; j++)
            if (m[j]) orow[j] /= z;
    }
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* op = out.get();
        out->backward_fn = [ap, op, mask = std::move(mask)] {
            size_t cols = ap->cols;
            for (size_t i = 0; i < ap->rows; i++) {
                const T* p = op->data.data() + i * cols;
                const T* dp = op->grad.data() + i * cols;
                const uint8_t* m = mask.data() + i * cols;
                T dot = 0;
                for (size_t j = 0; j < cols; j++)
                    if (m[j]) dot += p[j] * dp[j];
                T* dx = ap->grad.data() + i * cols;
                for (size_t j = 0; j < cols; j++)
                    if (m[j]) dx[j] += p[j] * (dp[j] - dot);
            }
        };
    }
    return out;
}

template <typename T>
ValueT<T> sum_all(const ValueT<T>& a) {
    auto out = detail::op_result<T>(1, 1, {a});
    T acc = 0;
    for (T v : a->data) acc += v;
    out->data[0] = acc;
    if (out->requires_grad) {
        auto* ap = a.get();
        auto* op = out.get();
        out->backward_fn = [ap, op] {
            for (size_t i = 0; i < ap->size(); i++) ap->grad[i] += op->grad[0];
        };
    }
    return out;
}

// -log softmax(logits)[label], computed log-sum-exp stably; logits is 1×P.
template <typename T>
ValueT<T> cross_entropy(const ValueT<T>& logits, int label) {
    detail::require(logits->rows == 1 && logits->cols >= 2, "shape_mismatch",
                    "cross_entropy expects a 1×P logits row with P >= 2");
    detail::require(label >= 0 && static_cast<size_t>(label) < logits->cols, "label_out_of_range",
                    "label index " + std::to_string(label) + " out of range");
    auto out = detail::op_result<T>(1, 1, {logits});
    T mx = *std::max_element(logits->data.begin(), logits->data.end());
    T z = 0;
    for (T v : logits->data) z += std::exp(v - mx);
    T lse = mx + std::log(z);
    out->data[0] = lse - logits->data[label];
    if (out->requires_grad) {
        auto* lp = logits.get();
        auto* op = out.get();
        out->backward_fn = [lp, op, label, mx, z] {
            for (size_t j = 0; j < lp->cols; j++) {
                T p = std::exp(lp->data[j] - mx) / z;
                lp->grad[j] += op->grad[0] * (p - (static_cast<size_t>(label) == j ? T(1) : T(0)));
            }
        };
    }
    return out;
}

// Populates grad on every ancestor of a scalar loss. Non-leaf grads start at
// zero when their tensors were freshly created by ops; parameter grads
// accumulate, so call zero_grad between steps.
template <typename T>
void backward(const ValueT<T>& loss) {
    detail::require(loss->rows == 1 && loss->cols == 1, "not_scalar",
                    "backward expects a scalar loss");
    if (!loss->requires_grad) return;

    std::vector<TensorT<T>*> order;
    std::unordered_set<TensorT<T>*> visited;
    std::vector<std::pair<TensorT<T>*, size_t>> stack{{loss.get(), 0}};
    visited.insert(loss.get());
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < node->parents.size()) {
            TensorT<T>* parent = node->parents[next++].get();
            if (parent->requires_grad && visited.insert(parent).second) stack.push_back({parent, 0});
        } else {
            order.push_back(node);
            stack.pop_back();
        }
    }

    loss->grad[0] = T(1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if ((*it)->backward_fn) (*it)->backward_fn();
}

}  // namespace sacc
