#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sacc/error.hpp"
#include "sacc/mask.hpp"
#include "sacc/rng.hpp"
#include "sacc/treesplit.hpp"

using namespace sacc;

namespace {

// brute-force pattern definitions, evaluated pair by pair
bool local_allowed(size_t i, size_t j, size_t w) {
    size_t dist = i > j ? i - j : j - i;
    return dist <= w / 2;
}
bool global_allowed(size_t i, size_t j, const std::vector<size_t>& g) {
    for (size_t e : g)
        if (i == e || j == e) return true;
    return i == j;
}

std::vector<int> random_parents(size_t n, Rng& rng) {
    std::vector<int> parent(n, -1);
    for (size_t i = 1; i < n; i++) parent[i] = static_cast<int>(rng.below(i));
    return parent;
}

size_t count_pairs_dense(const AttentionMask& mask) {
    size_t total = 0;
    auto bits = mask.dense();
    for (uint8_t b : bits) total += b;
    return total;
}

}  // namespace

TEST_CASE("local mask matches the brute-force band for all small N") {
    for (size_t n = 1; n <= 32; n++) {
        for (size_t w : {1, 3, 5}) {
            AttentionMask mask = local_mask(n, w);
            for (size_t i = 0; i < n; i++)
                for (size_t j = 0; j < n; j++) CHECK(mask.allows(i, j) == local_allowed(i, j, w));
        }
    }
}

TEST_CASE("local mask examples") {
    AttentionMask banded = local_mask(5, 3);
    for (size_t i = 0; i < 5; i++)
        for (size_t j = 0; j < 5; j++)
            CHECK(banded.allows(i, j) == (std::max(i, j) - std::min(i, j) <= 1));

    AttentionMask diag = local_mask(6, 1);
    CHECK(diag.pair_count() == 6);

    AttentionMask full = local_mask(4, 2 * 4 - 1);
    CHECK(full.pair_count() == 16);
}

TEST_CASE("strict local variant keeps only the diagonal at w=3") {
    AttentionMask strict = local_mask(5, 3, true);
    CHECK(strict.pair_count() == 5);
    AttentionMask wide = local_mask(5, 9, true);
    CHECK(wide.allows(0, 3));
    CHECK(!wide.allows(0, 4));  // distance 4 is not < 4
}

TEST_CASE("global mask matches the brute-force definition for all small N") {
    for (size_t n = 1; n <= 32; n++) {
        for (size_t g_size : {0, 1, 3}) {
            std::vector<size_t> g;
            for (size_t e = 0; e < std::min(n, g_size); e++) g.push_back(e);
            AttentionMask mask = global_mask(n, g);
            for (size_t i = 0; i < n; i++)
                for (size_t j = 0; j < n; j++) CHECK(mask.allows(i, j) == global_allowed(i, j, g));
        }
    }
}

TEST_CASE("global mask examples") {
    AttentionMask fig = global_mask(5, {0, 1, 2});
    for (size_t i = 0; i < 3; i++)
        for (size_t j = 0; j < 5; j++) {
            CHECK(fig.allows(i, j));
            CHECK(fig.allows(j, i));
        }
    CHECK(!fig.allows(3, 4));

    CHECK(global_mask(7, {}).pair_count() == 7);  // diagonal only
    CHECK(global_mask(4, {0, 1, 2, 3}).pair_count() == 16);
    CHECK_THROWS_AS(global_mask(4, {4}), Error);
}

TEST_CASE("ast mask mirrors the adjacency matrix") {
    SUBCASE("chain of three") {
        auto adj = adjacency_from_parents({-1, 0, 1});
        AttentionMask mask = ast_mask(adj);
        CHECK(mask.pair_count() == 7);  // tridiagonal
        CHECK(mask.allows(0, 1));
        CHECK(!mask.allows(0, 2));
    }
    SUBCASE("identity adjacency is the diagonal mask") {
        std::vector<std::vector<uint8_t>> eye(4, std::vector<uint8_t>(4, 0));
        for (size_t i = 0; i < 4; i++) eye[i][i] = 1;
        CHECK(ast_mask(eye).pair_count() == 4);
    }
    SUBCASE("the 7-tree sample shape gives diagonal + 12 edge entries") {
        auto adj = adjacency_from_parents({-1, 0, 1, 1, 3, 4, 1});
        CHECK(ast_mask(adj).pair_count() == 7 + 12);
    }
    SUBCASE("asymmetric input is rejected") {
        std::vector<std::vector<uint8_t>> bad = {{1, 1}, {0, 1}};
        try {
            ast_mask(bad);
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.kind() == "not_symmetric");
        }
    }
    SUBCASE("50 random trees match the matrix exactly") {
        Rng rng(17);
        for (int t = 0; t < 50; t++) {
            size_t n = 1 + rng.below(32);
            auto adj = adjacency_from_parents(random_parents(n, rng));
            AttentionMask mask = ast_mask(adj);
            for (size_t i = 0; i < n; i++)
                for (size_t j = 0; j < n; j++) CHECK(mask.allows(i, j) == (adj[i][j] != 0));
        }
    }
}

TEST_CASE("dilated mask allows multiples of the gap within the window") {
    AttentionMask mask = dilated_mask(6, 3, 2);
    CHECK(mask.allows(2, 0));
    CHECK(mask.allows(2, 2));
    CHECK(mask.allows(2, 4));
    CHECK(!mask.allows(2, 1));
    CHECK(!mask.allows(2, 3));

    // gap=1 degenerates to the local band
    for (size_t n : {1, 5, 9}) {
        AttentionMask dil = dilated_mask(n, 5, 1);
        AttentionMask loc = local_mask(n, 5);
        for (size_t i = 0; i < n; i++)
            for (size_t j = 0; j < n; j++) CHECK(dil.allows(i, j) == loc.allows(i, j));
    }
}

TEST_CASE("random mask is seed-reproducible with the diagonal forced") {
    AttentionMask a = random_mask(16, 3, 99);
    AttentionMask b = random_mask(16, 3, 99);
    AttentionMask c = random_mask(16, 3, 100);
    size_t diff = 0;
    for (size_t i = 0; i < 16; i++) {
        CHECK(a.row(i) == b.row(i));
        CHECK(a.allows(i, i));
        CHECK(a.row(i).size() >= 3);
        if (a.row(i) != c.row(i)) diff++;
    }
    CHECK(diff > 0);  // different seed, different mask
    CHECK(random_mask(8, 0, 5).pair_count() == 8);
}

TEST_CASE("union combines patterns and keeps provenance") {
    AttentionMask loc = local_mask(5, 3);
    AttentionMask glob = global_mask(5, {0});
    AttentionMask u = mask_union({loc, glob});

    for (size_t i = 0; i < 5; i++)
        for (size_t j = 0; j < 5; j++)
            CHECK(u.allows(i, j) == (loc.allows(i, j) || glob.allows(i, j)));

    CHECK((u.origin_of(0, 4) & kPatternGlobal) != 0);
    CHECK((u.origin_of(0, 4) & kPatternLocal) == 0);
    CHECK((u.origin_of(2, 3) & kPatternLocal) != 0);
    CHECK((u.origin_of(1, 1) & (kPatternLocal | kPatternGlobal)) != 0);

    SUBCASE("idempotent and absorbing") {
        AttentionMask diag(4);
        AttentionMask twice = mask_union({diag, diag});
        CHECK(twice.pair_count() == 4);

        AttentionMask full = local_mask(4, 7);
        AttentionMask m = mask_union({local_mask(4, 3), full});
        CHECK(m.pair_count() == 16);
    }
    SUBCASE("length mismatch is rejected") {
        try {
            mask_union({local_mask(3, 1), local_mask(4, 1)});
            FAIL("expected error");
        } catch (const Error& e) {
            CHECK(e.kind() == "length_mismatch");
        }
    }
}

TEST_CASE("union monotonicity and diagonal presence on random mask pairs") {
    Rng rng(23);
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng.below(24);
        AttentionMask a = random_mask(n, rng.below(n + 1), rng.next_u64());
        AttentionMask b = random_mask(n, rng.below(n + 1), rng.next_u64());
        AttentionMask u = mask_union({a, b});
        for (size_t i = 0; i < n; i++) {
            CHECK(u.allows(i, i));
            for (uint32_t j : a.row(i)) CHECK(u.allows(i, j));  // no pair removed
            for (uint32_t j : b.row(i)) CHECK(u.allows(i, j));
            for (uint32_t j : u.row(i)) CHECK((a.allows(i, j) || b.allows(i, j)));
        }
    }
}

TEST_CASE("pair counts stay linear with default patterns") {
    Rng rng(31);
    for (size_t n : {16, 64, 256, 1024}) {
        AttentionMask u = mask_union({local_mask(n, 3), global_mask(n, {0}),
                                      ast_mask(adjacency_from_parents(random_parents(n, rng)))});
        CHECK(u.pair_count() <= 8 * n);
        CHECK(u.pair_count() == count_pairs_dense(u));
    }
}

TEST_CASE("padding extension adds diagonal-only rows") {
    AttentionMask base = local_mask(4, 3);
    AttentionMask padded = base.extended(7);
    CHECK(padded.n() == 7);
    for (size_t i = 0; i < 4; i++) CHECK(padded.row(i) == base.row(i));
    for (size_t i = 4; i < 7; i++) {
        CHECK(padded.row(i).size() == 1);
        CHECK(padded.row(i)[0] == i);
    }
    CHECK_THROWS_AS(base.extended(2), Error);
}

TEST_CASE("provenance names render stably") {
    CHECK(pattern_bit_names(kPatternLocal | kPatternAst) ==
          std::vector<std::string>{"local", "ast"});
    CHECK(pattern_bit_names(0).empty());
    CHECK(pattern_bit_names(kPatternDiag) == std::vector<std::string>{"diag"});
}
