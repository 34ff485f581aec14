// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria cover sparse/dense kernel equivalence, gradient audits,
// mask algebra, pair-count bounds, kernel throughput, the parser/splitter
// golden shapes, desk-scale learning, metrics oracles, and determinism.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sacc/adamax.hpp"
#include "sacc/error.hpp"
#include "sacc/parser.hpp"
#include "sacc/train.hpp"
#include "support/corpus_gen.hpp"
#include "support/gradcheck.hpp"

namespace fs = std::filesystem;
using namespace sacc;
using sacc::testing::gradcheck_max_rel_error;
using sacc::testing::random_tensor;
using sacc::testing::random_weights;

namespace {

std::string g_cli_path = SACC_CLI_PATH;
std::string g_data_dir = SACC_DATA_DIR;

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& message) {
        if (!cond && ok) {
            ok = false;
            detail = message;
        }
    }
};

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return 1e300;
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

std::vector<int> random_parents(size_t n, Rng& rng) {
    std::vector<int> parent(n, -1);
    for (size_t i = 1; i < n; i++) parent[i] = static_cast<int>(rng.below(i));
    return parent;
}

std::string run_command(const std::string& cmd, int& status) {
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return output;
    }
    char buffer[4096];
    while (size_t got = fread(buffer, 1, sizeof(buffer), pipe)) output.append(buffer, got);
    int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return output;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() /
               ("sacc_acceptance_" + tag + "_" + std::to_string(::getpid()));
        fs::remove_all(path);
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

// ---------------------------------------------------------------- criterion 1

Check sparse_dense_equivalence() {
    Check check;
    Rng rng(101);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = 4 + rng.below(61);  // 4..64
        size_t dk = 4 + rng.below(13);
        AttentionMask mask = random_mask(n, rng.below(n + 1), rng.next_u64());
        auto weights = random_weights(n, dk, rng);

        std::vector<std::vector<double>> results[2];
        int which = 0;
        for (AttnPath path : {AttnPath::kSparse, AttnPath::kDense}) {
            Rng fill = Rng::derive(7000, static_cast<uint64_t>(trial));
            auto q = random_tensor(n, dk, fill);
            auto k = random_tensor(n, dk, fill);
            auto v = random_tensor(n, dk, fill);
            Value out = masked_attention(q, k, v, mask, path);
            backward(sum_all(mul(out, weights)));
            results[which] = {out->data, q->grad, k->grad, v->grad};
            which++;
        }
        for (int part = 0; part < 4; part++) {
            double diff = max_abs_diff(results[0][part], results[1][part]);
            check.expect(diff < 1e-9, "trial " + std::to_string(trial) + " diff " +
                                          std::to_string(diff));
        }
    }
    return check;
}

// ---------------------------------------------------------------- criterion 2

Check dense_degeneracy() {
    Check check;
    const char* sources[] = {"brute_force.c", "arithmetic.c", "string_reverse.c"};
    for (const char* name : sources) {
        StatementSequence seq =
            split(parse_source(read_file(g_data_dir + "/corpus/" + name)));
        std::vector<std::vector<std::string>> corpus;
        for (const auto& tree : seq.trees) corpus.push_back(tree_tokens(tree));
        Vocabulary vocab = build_vocab(corpus, 1);

        ModelConfig config;  // full-size defaults
        config.num_classes = 4;
        config.window = static_cast<int>(2 * seq.size() - 1);
        config.pattern_global = false;
        config.pattern_ast = false;
        auto params = init_model_params<double>(config, vocab.size(), 202);

        Value sparse = model_logits(seq, vocab, params, config, AttnPath::kSparse, 0);
        Value dense = model_logits(seq, vocab, params, config, AttnPath::kDense, 0);
        double diff = max_abs_diff(sparse->data, dense->data);
        check.expect(diff < 1e-12, std::string(name) + " logits diff " + std::to_string(diff));
    }
    return check;
}

// ---------------------------------------------------------------- criterion 3

Check gradient_audit() {
    Check check;
    for (uint64_t seed = 1; seed <= 10; seed++) {
        Rng rng(seed);
        auto expect_grad = [&](const char* tag, double err) {
            check.expect(err < 1e-4,
                         std::string(tag) + " seed " + std::to_string(seed) + " rel err " +
                             std::to_string(err));
        };

        {
            auto a = random_tensor(4, 4, rng);
            auto b = random_tensor(4, 4, rng);
            auto w = random_weights(4, 4, rng);
            expect_grad("matmul", gradcheck_max_rel_error(
                                      {a, b}, [&] { return sum_all(mul(matmul(a, b), w)); }));
        }
        {
            auto a = random_tensor(3, 4, rng);
            auto b = random_tensor(3, 4, rng);
            auto bias = random_tensor(1, 4, rng);
            auto w = random_weights(3, 4, rng);
            expect_grad("add family", gradcheck_max_rel_error({a, b, bias}, [&] {
                            return sum_all(mul(
                                add_n({add(a, b), add_bias(mul(a, b), bias), scale(a, 0.3)}), w));
                        }));
        }
        {
            auto a = random_tensor(3, 3, rng);
            for (auto& v : a->data)
                if (std::abs(v) < 0.05) v = -0.2;
            auto w = random_weights(3, 3, rng);
            expect_grad("tanh/relu", gradcheck_max_rel_error({a}, [&] {
                            return sum_all(mul(add(tanh(a), relu(a)), w));
                        }));
        }
        {
            auto a = random_tensor(4, 3, rng);
            for (size_t i = 0; i < a->size(); i++) a->data[i] += 0.001 * static_cast<double>(i);
            auto w = random_weights(1, 3, rng);
            expect_grad("maxpool", gradcheck_max_rel_error({a}, [&] {
                            return sum_all(mul(max_over_rows(a), w));
                        }));
            auto wt = random_weights(3, 4, rng);
            expect_grad("transpose", gradcheck_max_rel_error({a}, [&] {
                            return sum_all(mul(transpose(a), wt));
                        }));
            auto wg = random_weights(3, 3, rng);
            expect_grad("gather/slice", gradcheck_max_rel_error({a}, [&] {
                            return sum_all(
                                mul(gather_rows(slice_rows(a, 0, 3), {2, 0, 1}), wg));
                        }));
        }
        {
            auto a = random_tensor(3, 6, rng);
            auto gain = random_tensor(1, 6, rng, true, 0.5, 1.5);
            auto bias = random_tensor(1, 6, rng);
            auto w = random_weights(3, 6, rng);
            expect_grad("layer_norm", gradcheck_max_rel_error({a, gain, bias}, [&] {
                            return sum_all(mul(layer_norm(a, gain, bias), w));
                        }));
        }
        {
            auto a = random_tensor(4, 5, rng);
            std::vector<uint8_t> bits(20, 0);
            for (size_t i = 0; i < 4; i++) {
                bits[i * 5 + i] = 1;
                for (size_t j = 0; j < 5; j++)
                    if (rng.below(2)) bits[i * 5 + j] = 1;
            }
            auto w = random_weights(4, 5, rng);
            expect_grad("masked softmax", gradcheck_max_rel_error({a}, [&] {
                            return sum_all(mul(softmax_rows_masked(a, bits), w));
                        }));
        }
        {
            auto a = random_tensor(1, 7, rng);
            expect_grad("cross_entropy",
                        gradcheck_max_rel_error({a}, [&] { return cross_entropy(a, 3); }));
        }
        {
            size_t n = 5;
            AttentionMask mask = random_mask(n, 2, rng.next_u64());
            auto q = random_tensor(n, 3, rng);
            auto k = random_tensor(n, 3, rng);
            auto v = random_tensor(n, 3, rng);
            auto w = random_weights(n, 3, rng);
            expect_grad("sparse attention", gradcheck_max_rel_error({q, k, v}, [&] {
                            return sum_all(mul(sparse_gather_attention(q, k, v, mask), w));
                        }));
        }
    }

    // end-to-end: full model loss against finite differences, both paths
    StatementSequence seq = split(parse_source("int main(){ int a; while (a) { a = a - 1; } return a; }"));
    std::vector<std::vector<std::string>> corpus;
    for (const auto& tree : seq.trees) corpus.push_back(tree_tokens(tree));
    Vocabulary vocab = build_vocab(corpus, 1);
    ModelConfig config;
    config.d_model = 8;
    config.heads = 2;
    config.d_k = 4;
    config.d_v = 4;
    config.d_ff = 8;
    config.layers = 1;
    config.num_classes = 3;
    auto params = init_model_params<double>(config, vocab.size(), 303);
    std::vector<Value> leaves;
    for (auto& [name, tensor] : params.named_tensors()) leaves.push_back(tensor);
    for (AttnPath path : {AttnPath::kSparse, AttnPath::kDense}) {
        double err = gradcheck_max_rel_error(leaves, [&] {
            return cross_entropy(model_logits(seq, vocab, params, config, path, 0), 2);
        });
        check.expect(err < 1e-4, "end-to-end rel err " + std::to_string(err));
    }
    return check;
}

// ---------------------------------------------------------------- criterion 4

Check mask_algebra() {
    Check check;
    for (size_t n = 1; n <= 32; n++) {
        for (size_t w : {1, 3, 5}) {
            AttentionMask mask = local_mask(n, w);
            for (size_t i = 0; i < n; i++)
                for (size_t j = 0; j < n; j++) {
                    size_t dist = i > j ? i - j : j - i;
                    check.expect(mask.allows(i, j) == (dist <= w / 2), "local mismatch");
                }
        }
        for (size_t g_size : {0, 1, 3}) {
            std::vector<size_t> g;
            for (size_t e = 0; e < std::min(n, g_size); e++) g.push_back(e);
            AttentionMask mask = global_mask(n, g);
            for (size_t i = 0; i < n; i++)
                for (size_t j = 0; j < n; j++) {
                    bool expected = i == j;
                    for (size_t e : g) expected = expected || i == e || j == e;
                    check.expect(mask.allows(i, j) == expected, "global mismatch");
                }
        }
    }
    Rng rng(404);
    for (int t = 0; t < 50; t++) {
        size_t n = 1 + rng.below(32);
        auto adj = adjacency_from_parents(random_parents(n, rng));
        AttentionMask mask = ast_mask(adj);
        for (size_t i = 0; i < n; i++)
            for (size_t j = 0; j < n; j++)
                check.expect(mask.allows(i, j) == (adj[i][j] != 0), "ast mismatch");
    }
    for (int t = 0; t < 200; t++) {
        size_t n = 1 + rng.below(24);
        AttentionMask a = random_mask(n, rng.below(n + 1), rng.next_u64());
        AttentionMask b = random_mask(n, rng.below(n + 1), rng.next_u64());
        AttentionMask u = mask_union({a, b});
        for (size_t i = 0; i < n; i++) {
            check.expect(u.allows(i, i), "diagonal missing");
            for (uint32_t j : a.row(i)) check.expect(u.allows(i, j), "union dropped a pair");
            for (uint32_t j : b.row(i)) check.expect(u.allows(i, j), "union dropped a pair");
        }
    }
    return check;
}

// ---------------------------------------------------------------- criterion 5

Check linear_pair_count() {
    Check check;
    Rng rng(505);
    for (size_t n : {16, 64, 256, 1024, 4096}) {
        AttentionMask mask =
            mask_union({local_mask(n, 3), global_mask(n, {0}),
                        ast_mask(adjacency_from_parents(random_parents(n, rng)))});
        check.expect(mask.pair_count() <= 8 * n,
                     "N=" + std::to_string(n) + " pairs=" + std::to_string(mask.pair_count()));
    }
    return check;
}

// ---------------------------------------------------------------- criterion 6

Check kernel_throughput() {
    Check check;
    int status = 0;
    std::string csv =
        run_command(g_cli_path + " bench --lengths 1024 --repeats 3 2>/dev/null", status);
    check.expect(status == 0, "bench exited with " + std::to_string(status));
    if (!check.ok) return check;

    std::istringstream lines(csv);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    long n = 0, pairs = 0, pairs_dense = 0;
    double t_sparse = 0, t_dense = 0;
    char comma;
    std::istringstream fields(row);
    fields >> n >> comma >> pairs >> comma >> pairs_dense >> comma >> t_sparse >> comma >> t_dense;
    check.expect(n == 1024, "unexpected bench row: " + row);
    check.expect(pairs <= 8 * 1024, "pairs " + std::to_string(pairs));
    check.expect(pairs_dense == 1024 * 1024, "dense pairs " + std::to_string(pairs_dense));
    check.expect(t_sparse > 0 && t_dense > 0, "non-positive timings");
    check.expect(t_sparse <= 0.5 * t_dense, "ratio " + std::to_string(t_sparse / t_dense));
    if (check.ok)
        check.detail = "sparse " + std::to_string(t_sparse) + "s vs dense " +
                       std::to_string(t_dense) + "s";
    return check;
}

// ---------------------------------------------------------------- criterion 7

Check golden_suite() {
    Check check;
    struct Golden {
        const char* file;
        std::vector<int> parent;
    };
    const Golden golden[] = {
        {"brute_force.c", {-1, 0, 1, 1, 3, 4, 1}},
        {"dynamic_programming.c", {-1, 0, 1, 1, 1, 1, 1, 1, 7, 1}},
        {"sorting.c", {-1, 0, 1, 0, 3, 3, 3, 6, 3, 3, 3, 10, 3, 3}},
        {"arithmetic.c", {-1, 0, 1, 1, 3, 3, 3, 6, 6, 6, 3, 1}},
        {"graph_theory.c", {-1, 0,  0,  0,  3,  3,  5,  3,  7,  8,  9,  9, 9, 9,
                            0,  14, 14, 14, 17, 18, 18, 14, 14, 22, 22, 14, 14}},
        {"computational_geometry.c", {-1, 0, 1, 1, 1, 1, 1, 1, 1, 8, 8, 8, 8, 1, 1}},
        {"string_reverse.c", {-1, 0, 0, 0, 3, 3, 5, 3, 3}},
    };
    for (const auto& g : golden) {
        try {
            StatementSequence seq = split(parse_source(read_file(g_data_dir + "/corpus/" + g.file)));
            check.expect(seq.parent == g.parent, std::string(g.file) + " parent mismatch");
            check.expect(seq.size() == g.parent.size(), std::string(g.file) + " count mismatch");
        } catch (const Error& e) {
            check.expect(false, std::string(g.file) + ": " + e.what());
        }
    }
    return check;
}

// ---------------------------------------------------------------- criterion 8

struct LearningResult {
    double train_accuracy = 0;
    double test_accuracy = 0;
};

LearningResult train_once(const Dataset& dataset, uint64_t seed, bool ast_pattern, int epochs) {
    ModelConfig model;  // full-size defaults: d=128, 2 layers, w=3, d_ff=2048
    model.pattern_ast = ast_pattern;
    TrainConfig tc;
    tc.epochs = epochs;
    tc.seed = seed;
    TrainOutput out = train_model(dataset, model, tc);
    LearningResult result;
    result.train_accuracy = evaluate_model(out.best, dataset, Split::kTrain).accuracy;
    result.test_accuracy = evaluate_model(out.best, dataset, Split::kTest).accuracy;
    return result;
}

Check desk_scale_learning() {
    Check check;
    TempDir dir("learning");
    std::string manifest = sacc::testing::write_corpus(dir.path.string(), 50, 808);
    Dataset dataset = ingest(manifest, 1);
    check.expect(dataset.samples.size() == 200, "corpus generation failed");
    check.expect(dataset.failures.empty(), "generated programs must all parse");

    auto start = std::chrono::steady_clock::now();
    LearningResult main_run = train_once(dataset, 1, true, 30);
    double minutes =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / 60.0;
    check.expect(main_run.train_accuracy >= 0.95,
                 "train accuracy " + std::to_string(main_run.train_accuracy));
    check.expect(main_run.test_accuracy >= 0.80,
                 "test accuracy " + std::to_string(main_run.test_accuracy));
    check.expect(minutes < 15.0, "training took " + std::to_string(minutes) + " min");

    // ablation echo: disabling the ast pattern must not help (median over seeds)
    std::vector<double> deltas;
    for (uint64_t seed = 1; seed <= 5; seed++) {
        LearningResult with_ast = seed == 1 ? main_run : train_once(dataset, seed, true, 30);
        LearningResult without_ast = train_once(dataset, seed, false, 30);
        deltas.push_back(without_ast.test_accuracy - with_ast.test_accuracy);
    }
    std::sort(deltas.begin(), deltas.end());
    double median = deltas[deltas.size() / 2];
    check.expect(median <= 0.0, "median ablation delta " + std::to_string(median));
    if (check.ok)
        check.detail = "train " + std::to_string(main_run.train_accuracy) + ", test " +
                       std::to_string(main_run.test_accuracy) + ", " +
                       std::to_string(minutes) + " min, median ablation delta " +
                       std::to_string(median);
    return check;
}

// ---------------------------------------------------------------- criterion 9

Check metrics_oracle() {
    Check check;
    struct Case {
        std::vector<int> preds, truths;
        size_t classes;
        double accuracy, macro_p, macro_r, macro_f1;
    };
    // hand-computed one-vs-rest confusion results, zero divisions -> 0
    const Case cases[] = {
        {{0, 1, 2}, {0, 1, 2}, 3, 1.0, 1.0, 1.0, 1.0},
        {{0, 0, 0, 0}, {0, 0, 1, 1}, 2, 0.5, 0.25, 0.5, 1.0 / 3.0},
        {{0, 0, 0, 1, 2, 2}, {0, 0, 1, 1, 2, 2}, 3, 5.0 / 6.0, (2.0 / 3.0 + 1.0 + 1.0) / 3.0,
         5.0 / 6.0, (0.8 + 2.0 / 3.0 + 1.0) / 3.0},
        {{1, 1, 1}, {0, 0, 0}, 2, 0.0, 0.0, 0.0, 0.0},
        {{0}, {0}, 2, 1.0, 0.5, 0.5, 0.5},
        {{0, 1}, {1, 0}, 2, 0.0, 0.0, 0.0, 0.0},
        {{0, 1, 1, 0}, {0, 1, 0, 1}, 2, 0.5, 0.5, 0.5, 0.5},
        {{2, 2, 2, 2}, {2, 2, 2, 2}, 3, 1.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0},
        {{0, 0, 1, 2}, {0, 0, 1, 1}, 3, 0.75, (1.0 + 1.0 + 0.0) / 3.0,
         (1.0 + 0.5 + 0.0) / 3.0, (1.0 + 2.0 / 3.0 + 0.0) / 3.0},
        {{1, 0, 1, 0, 1}, {1, 1, 1, 0, 0}, 2, 3.0 / 5.0, (0.5 + 2.0 / 3.0) / 2.0,
         (0.5 + 2.0 / 3.0) / 2.0, (0.5 + 2.0 / 3.0) / 2.0},
    };
    int index = 0;
    for (const auto& c : cases) {
        Metrics m = compute_metrics(c.preds, c.truths, c.classes);
        auto close = [](double a, double b) { return std::abs(a - b) < 1e-14; };
        check.expect(close(m.accuracy, c.accuracy),
                     "case " + std::to_string(index) + " accuracy " + std::to_string(m.accuracy));
        check.expect(close(m.macro_precision, c.macro_p),
                     "case " + std::to_string(index) + " precision " +
                         std::to_string(m.macro_precision));
        check.expect(close(m.macro_recall, c.macro_r),
                     "case " + std::to_string(index) + " recall " + std::to_string(m.macro_recall));
        check.expect(close(m.macro_f1, c.macro_f1),
                     "case " + std::to_string(index) + " f1 " + std::to_string(m.macro_f1));
        index++;
    }
    return check;
}

// --------------------------------------------------------------- criterion 10

Check determinism_round_trip() {
    Check check;
    Dataset dataset = ingest(g_data_dir + "/corpus/manifest.jsonl", 2);
    ModelConfig model;
    model.d_model = 32;
    model.heads = 2;
    model.d_k = 16;
    model.d_v = 16;
    model.d_ff = 64;
    model.layers = 2;
    TrainConfig tc;
    tc.epochs = 5;
    tc.batch_size = 4;
    tc.seed = 99;

    TrainOutput a = train_model(dataset, model, tc);
    TrainOutput b = train_model(dataset, model, tc);
    check.expect(history_to_csv(a.history) == history_to_csv(b.history),
                 "fixed-seed histories differ");

    TempDir dir("roundtrip");
    std::string path = (dir.path / "model.sacc").string();
    save_checkpoint(path, a.best);
    Checkpoint loaded = load_checkpoint(path);
    auto original = a.best.params.named_tensors();
    auto restored = loaded.params.named_tensors();
    check.expect(original.size() == restored.size(), "manifest size changed");
    for (size_t i = 0; i < original.size(); i++)
        check.expect(original[i].second->data == restored[i].second->data,
                     "parameter " + original[i].first + " not bit-identical");

    Metrics before = evaluate_model(a.best, dataset, Split::kTest);
    Metrics after = evaluate_model(loaded, dataset, Split::kTest);
    check.expect(metrics_to_json(before, a.best.label_names) ==
                     metrics_to_json(after, loaded.label_names),
                 "evaluation after reload differs");
    return check;
}

}  // namespace

int main(int argc, char** argv) {
    bool skip_slow = false;
    int only = 0;
    for (int i = 1; i < argc; i++) {
        std::string arg = argv[i];
        if (arg == "--cli" && i + 1 < argc)
            g_cli_path = argv[++i];
        else if (arg == "--data" && i + 1 < argc)
            g_data_dir = argv[++i];
        else if (arg == "--only" && i + 1 < argc)
            only = std::atoi(argv[++i]);
        else if (arg == "--skip-slow")
            skip_slow = true;
    }

    struct Criterion {
        int number;
        const char* name;
        std::function<Check()> run;
        bool slow;
    };
    const std::vector<Criterion> criteria = {
        {1, "sparse/dense equivalence (outputs and gradients, 1e-9)", sparse_dense_equivalence,
         false},
        {2, "dense degeneracy (full-window model matches dense run, 1e-12)", dense_degeneracy,
         false},
        {3, "gradient audit (finite differences, 10 seeds, 1e-4)", gradient_audit, false},
        {4, "mask algebra (exhaustive N<=32 and random trees)", mask_algebra, false},
        {5, "linear pair count (<= 8N up to N=4096)", linear_pair_count, false},
        {6, "kernel throughput (sparse <= 0.5x dense at N=1024)", kernel_throughput, false},
        {7, "parser/splitter golden suite (7 bundled programs)", golden_suite, false},
        {8, "desk-scale learning (200 programs, 4 classes, ablation echo)", desk_scale_learning,
         true},
        {9, "metrics oracle (10 fixed confusion cases)", metrics_oracle, false},
        {10, "determinism and checkpoint round-trip", determinism_round_trip, false},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        if (only != 0 && criterion.number != only) continue;
        if (skip_slow && criterion.slow) {
            std::printf("[SKIP] %2d. %s\n", criterion.number, criterion.name);
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        Check result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail = std::string("exception: ") + e.what();
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("[%s] %2d. %s (%.1fs)%s%s\n", result.ok ? "PASS" : "FAIL", criterion.number,
                    criterion.name, secs, result.detail.empty() ? "" : " — ",
                    result.detail.c_str());
        std::fflush(stdout);
        if (!result.ok) failures++;
    }
    return failures;
}
