#include "sacc/mask.hpp"

#include <algorithm>

#include "sacc/error.hpp"

namespace sacc {

std::vector<std::string> pattern_bit_names(uint8_t bits) {
    std::vector<std::string> names;
    if (bits & kPatternLocal) names.push_back("local");
    if (bits & kPatternGlobal) names.push_back("global");
    if (bits & kPatternAst) names.push_back("ast");
    if (bits & kPatternDilated) names.push_back("dilated");
    if (bits & kPatternRandom) names.push_back("random");
    if (bits & kPatternDiag) names.push_back("diag");
    return names;
}

AttentionMask::AttentionMask(size_t n) : n_(n), rows_(n), origins_(n) {
    for (size_t i = 0; i < n; i++) {
        rows_[i].push_back(static_cast<uint32_t>(i));
        origins_[i].push_back(kPatternDiag);
    }
}

bool AttentionMask::allows(size_t i, size_t j) const {
    const auto& row = rows_[i];
    return std::binary_search(row.begin(), row.end(), static_cast<uint32_t>(j));
}

uint8_t AttentionMask::origin_of(size_t i, size_t j) const {
    const auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<uint32_t>(j));
    if (it == row.end() || *it != j) return 0;
    return origins_[i][static_cast<size_t>(it - row.begin())];
}

size_t AttentionMask::pair_count() const {
    size_t total = 0;
    for (const auto& row : rows_) total += row.size();
    return total;
}

void AttentionMask::allow(size_t i, size_t j, uint8_t pattern) {
    if (i >= n_ || j >= n_) throw Error("index_out_of_range", "mask pair out of range");
    auto& row = rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), static_cast<uint32_t>(j));
    if (it != row.end() && *it == j) {
        origins_[i][static_cast<size_t>(it - row.begin())] |= pattern;
    } else {
        size_t pos = static_cast<size_t>(it - row.begin());
        row.insert(it, static_cast<uint32_t>(j));
        origins_[i].insert(origins_[i].begin() + static_cast<long>(pos), pattern);
    }
}

std::vector<uint8_t> AttentionMask::dense() const {
    std::vector<uint8_t> bits(n_ * n_, 0);
    for (size_t i = 0; i < n_; i++)
        for (uint32_t j : rows_[i]) bits[i * n_ + j] = 1;
    return bits;
}

AttentionMask AttentionMask::extended(size_t padded_n) const {
    if (padded_n < n_) throw Error("index_out_of_range", "padded length below mask length");
    AttentionMask out(padded_n);
    for (size_t i = 0; i < n_; i++)
        for (size_t pos = 0; pos < rows_[i].size(); pos++)
            out.allow(i, rows_[i][pos], origins_[i][pos]);
    return out;
}

AttentionMask local_mask(size_t n, size_t window, bool strict) {
    if (window < 1) throw Error("index_out_of_range", "window must be >= 1");
    size_t half = window / 2;
    AttentionMask mask(n);
    for (size_t i = 0; i < n; i++) {
        size_t lo = i > half ? i - half : 0;
        size_t hi = std::min(n - 1, i + half);
        for (size_t j = lo; j <= hi; j++) {
            size_t dist = i > j ? i - j : j - i;
            if (strict ? dist < half : dist <= half) mask.allow(i, j, kPatternLocal);
        }
    }
    return mask;
}

AttentionMask global_mask(size_t n, const std::vector<size_t>& global_elements) {
    AttentionMask mask(n);
    for (size_t g : global_elements) {
        if (g >= n) throw Error("index_out_of_range", "global element index out of range");
        for (size_t k = 0; k < n; k++) {
            mask.allow(g, k, kPatternGlobal);
            mask.allow(k, g, kPatternGlobal);
        }
    }
    return mask;
}

AttentionMask ast_mask(const std::vector<std::vector<uint8_t>>& adj) {
    size_t n = adj.size();
    for (size_t i = 0; i < n; i++) {
        if (adj[i].size() != n) throw Error("not_symmetric", "adjacency matrix is not square");
        for (size_t j = 0; j < n; j++)
            if (adj[i][j] != adj[j][i])
                throw Error("not_symmetric", "adjacency matrix is not symmetric");
    }
    AttentionMask mask(n);
    for (size_t i = 0; i < n; i++)
        for (size_t j = 0; j < n; j++)
            if (adj[i][j]) mask.allow(i, j, kPatternAst);
    return mask;
}

AttentionMask dilated_mask(size_t n, size_t window, size_t gap) {
    if (gap < 1) throw Error("index_out_of_range", "gap must be >= 1");
    size_t half = window / 2;
    AttentionMask mask(n);
    for (size_t i = 0; i < n; i++) {
        mask.allow(i, i, kPatternDilated);
        for (size_t step = 1; step <= half; step++) {
            size_t offset = step * gap;
            if (i >= offset) mask.allow(i, i - offset, kPatternDilated);
            if (i + offset < n) mask.allow(i, i + offset, kPatternDilated);
        }
    }
    return mask;
}

AttentionMask random_mask(size_t n, size_t per_row, uint64_t seed) {
    if (per_row > n) throw Error("index_out_of_range", "per_row exceeds sequence length");
    Rng rng(seed);
    AttentionMask mask(n);
    for (size_t i = 0; i < n; i++) {
        // Floyd's sampling: per_row distinct columns
        std::vector<uint32_t> picked;
        for (size_t k = n - per_row; k < n; k++) {
            uint32_t candidate = static_cast<uint32_t>(rng.below(k + 1));
            if (std::find(picked.begin(), picked.end(), candidate) != picked.end())
                candidate = static_cast<uint32_t>(k);
            picked.push_back(candidate);
        }
        for (uint32_t j : picked) mask.allow(i, j, kPatternRandom);
    }
    return mask;
}

AttentionMask mask_union(const std::vector<AttentionMask>& masks) {
    if (masks.empty()) throw Error("length_mismatch", "mask_union needs at least one mask");
    size_t n = masks[0].n();
    for (const auto& m : masks)
        if (m.n() != n) throw Error("length_mismatch", "mask_union lengths differ");
    AttentionMask out(n);
    for (const auto& m : masks)
        for (size_t i = 0; i < n; i++)
            for (size_t pos = 0; pos < m.row(i).size(); pos++)
                out.allow(i, m.row(i)[pos], m.origin(i, pos));
    return out;
}

}  // namespace sacc
