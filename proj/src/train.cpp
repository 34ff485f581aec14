#include "sacc/train.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "sacc/adamax.hpp"
#include "sacc/error.hpp"

namespace sacc {
namespace {

int argmax_class(const Value& logits) {
    return static_cast<int>(std::max_element(logits->data.begin(), logits->data.end()) -
                            logits->data.begin());
}

double split_accuracy(const Dataset& dataset, const std::vector<size_t>& indices,
                      const Vocabulary& vocab, const ModelParams& params,
                      const ModelConfig& config, AttnPath path, uint64_t mask_seed) {
    if (indices.empty()) return 0.0;
    long correct = 0;
    for (size_t idx : indices) {
        const Sample& sample = dataset.samples[idx];
        Value logits = model_logits(sample.seq, vocab, params, config, path, mask_seed);
        if (argmax_class(logits) == sample.label) correct++;
    }
    return static_cast<double>(correct) / static_cast<double>(indices.size());
}

}  // namespace

TrainOutput train_model(const Dataset& dataset, ModelConfig model_config,
                        const TrainConfig& train_config, AttnPath path) {
    train_config.validate();
    if (model_config.num_classes == 0)
        model_config.num_classes = static_cast<int>(dataset.num_classes());
    if (model_config.num_classes < static_cast<int>(dataset.num_classes()))
        throw Error("bad_config", "num_classes below the dataset's label count");
    model_config.validate();

    std::vector<size_t> train_indices = dataset.indices_of(Split::kTrain);
    std::vector<size_t> val_indices = dataset.indices_of(Split::kVal);
    if (train_indices.empty()) throw Error("empty_train_split", "no training samples");

    Vocabulary vocab =
        build_vocab(token_corpus(dataset, train_indices), model_config.min_freq);
    ModelParams params =
        init_model_params<double>(model_config, vocab.size(), train_config.seed);

    std::vector<Value> tensors;
    for (auto& [name, tensor] : params.named_tensors()) tensors.push_back(tensor);
    Adamax optimizer(tensors, train_config.lr, train_config.beta1, train_config.beta2,
                     train_config.eps);

    TrainOutput out;
    out.best_epoch = 0;
    double best_val = -1.0;
    ModelParams best_params = clone_params(params);

    uint64_t mask_seed = train_config.seed;
    size_t batch_size = static_cast<size_t>(train_config.batch_size);

    for (int epoch = 1; epoch <= train_config.epochs; epoch++) {
        std::vector<size_t> order = train_indices;
        if (train_config.shuffle) {
            Rng rng = Rng::derive(train_config.seed, static_cast<uint64_t>(epoch));
            rng.shuffle(order);
        }

        double loss_sum = 0;
        for (size_t start = 0; start < order.size(); start += batch_size) {
            size_t stop = std::min(order.size(), start + batch_size);
            optimizer.zero_grad();
            std::vector<Value> losses;
            for (size_t pos = start; pos < stop; pos++) {
                const Sample& sample = dataset.samples[order[pos]];
                Value logits =
                    model_logits(sample.seq, vocab, params, model_config, path, mask_seed);
                losses.push_back(cross_entropy(logits, sample.label));
            }
            Value batch_loss = scale(add_n(losses), 1.0 / static_cast<double>(losses.size()));
            backward(batch_loss);
            optimizer.step();
            loss_sum += batch_loss->value() * static_cast<double>(losses.size());
        }

        EpochRecord record;
        record.epoch = epoch;
        record.train_loss = loss_sum / static_cast<double>(order.size());
        record.val_accuracy = split_accuracy(dataset, val_indices, vocab, params, model_config,
                                             path, mask_seed);
        out.history.push_back(record);

        if (record.val_accuracy > best_val) {
            best_val = record.val_accuracy;
            out.best_epoch = epoch;
            best_params = clone_params(params);
        }
    }

    out.best = {model_config, vocab, dataset.label_names, std::move(best_params)};
    out.final = {model_config, vocab, dataset.label_names, clone_params(params)};
    return out;
}

Metrics evaluate_model(const Checkpoint& checkpoint, const Dataset& dataset, Split split,
                       AttnPath path, uint64_t mask_seed) {
    std::vector<size_t> indices = dataset.indices_of(split);
    if (indices.empty()) throw Error("empty_split", "evaluation split is empty");
    std::vector<int> predictions, truths;
    for (size_t idx : indices) {
        const Sample& sample = dataset.samples[idx];
        Value logits = model_logits(sample.seq, checkpoint.vocab, checkpoint.params,
                                    checkpoint.config, path, mask_seed);
        predictions.push_back(argmax_class(logits));
        truths.push_back(sample.label);
    }
    return compute_metrics(predictions, truths, checkpoint.label_names.size());
}

std::pair<int, std::vector<double>> predict(const Checkpoint& checkpoint,
                                            const StatementSequence& seq, AttnPath path,
                                            uint64_t mask_seed) {
    Value logits = model_logits(seq, checkpoint.vocab, checkpoint.params, checkpoint.config,
                                path, mask_seed);
    double mx = *std::max_element(logits->data.begin(), logits->data.end());
    std::vector<double> probs(logits->data.size());
    double z = 0;
    for (size_t j = 0; j < probs.size(); j++) {
        probs[j] = std::exp(logits->data[j] - mx);
        z += probs[j];
    }
    for (auto& p : probs) p /= z;
    return {argmax_class(logits), probs};
}

std::string history_to_csv(const std::vector<EpochRecord>& history) {
    std::string csv = "epoch,train_loss,val_accuracy\n";
    char line[128];
    for (const auto& record : history) {
        std::snprintf(line, sizeof(line), "%d,%.17g,%.17g\n", record.epoch, record.train_loss,
                      record.val_accuracy);
        csv += line;
    }
    return csv;
}

}  // namespace sacc
