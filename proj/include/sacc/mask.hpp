#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sacc/rng.hpp"

namespace sacc {

// Which sparse patterns admitted an attention pair. Diag marks diagonal
// entries forced by the mask invariant rather than contributed by a pattern.
enum PatternBit : uint8_t {
    kPatternLocal = 1,
    kPatternGlobal = 2,
    kPatternAst = 4,
    kPatternDilated = 8,
    kPatternRandom = 16,
    kPatternDiag = 32,
};

std::vector<std::string> pattern_bit_names(uint8_t bits);

// Per-row allowed-column sets with per-pair pattern provenance. Rows are
// sorted ascending, contain no duplicates, and always include the diagonal.
class AttentionMask {
public:
    explicit AttentionMask(size_t n);

    size_t n() const { return n_; }
    const std::vector<uint32_t>& row(size_t i) const { return rows_[i]; }
    uint8_t origin(size_t i, size_t pos) const { return origins_[i][pos]; }

    bool allows(size_t i, size_t j) const;
    // provenance bits for pair (i,j); 0 when disallowed
    uint8_t origin_of(size_t i, size_t j) const;

    size_t pair_count() const;

    void allow(size_t i, size_t j, uint8_t pattern);

    // dense row-major boolean matrix, for the dense-masked path
    std::vector<uint8_t> dense() const;

    // same rows plus diagonal-only padding rows appended up to padded_n
    AttentionMask extended(size_t padded_n) const;

private:
    size_t n_;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<std::vector<uint8_t>> origins_;
};

// (i,j) allowed iff |i-j| <= floor(w/2). `strict` uses < instead, which
// degenerates to the diagonal for w <= 3; kept for comparison runs.
AttentionMask local_mask(size_t n, size_t window, bool strict = false);

// (i,j) allowed iff i or j is a global element; diagonal added.
AttentionMask global_mask(size_t n, const std::vector<size_t>& global_elements);

// (i,j) allowed iff adj[i][j], where adj is symmetric with ones on the
// diagonal (as produced by adjacency()).
AttentionMask ast_mask(const std::vector<std::vector<uint8_t>>& adj);

// (i,j) allowed iff |i-j| is a multiple of gap no larger than floor(w/2)*gap.
AttentionMask dilated_mask(size_t n, size_t window, size_t gap);

// per_row uniformly sampled columns per row plus the diagonal.
AttentionMask random_mask(size_t n, size_t per_row, uint64_t seed);

// pair allowed iff allowed in any input; provenance is OR-combined
AttentionMask mask_union(const std::vector<AttentionMask>& masks);

}  // namespace sacc
