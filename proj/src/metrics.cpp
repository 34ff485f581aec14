#include "sacc/metrics.hpp"

#include <json.hpp>

#include "sacc/error.hpp"

namespace sacc {

Metrics compute_metrics(const std::vector<int>& predictions, const std::vector<int>& truths,
                        size_t num_classes) {
    if (predictions.empty() || predictions.size() != truths.size())
        throw Error("empty_split", "metrics need matching non-empty prediction/truth lists");

    Metrics m;
    m.per_class.resize(num_classes);
    m.total = static_cast<long>(predictions.size());
    for (size_t i = 0; i < predictions.size(); i++) {
        int pred = predictions[i];
        int truth = truths[i];
        if (pred < 0 || truth < 0 || static_cast<size_t>(pred) >= num_classes ||
            static_cast<size_t>(truth) >= num_classes)
            throw Error("label_out_of_range", "class index out of range");
        if (pred == truth) m.correct++;
        for (size_t c = 0; c < num_classes; c++) {
            bool is_pred = static_cast<size_t>(pred) == c;
            bool is_truth = static_cast<size_t>(truth) == c;
            auto& pc = m.per_class[c];
            if (is_pred && is_truth)
                pc.tp++;
            else if (is_pred && !is_truth)
                pc.fp++;
            else if (!is_pred && is_truth)
                pc.fn++;
            else
                pc.tn++;
        }
    }
    m.accuracy = static_cast<double>(m.correct) / static_cast<double>(m.total);

    auto ratio = [](long num, long den) { return den == 0 ? 0.0 : static_cast<double>(num) / den; };
    for (auto& pc : m.per_class) {
        pc.precision = ratio(pc.tp, pc.tp + pc.fp);
        pc.recall = ratio(pc.tp, pc.tp + pc.fn);
        pc.f1 = (pc.precision + pc.recall) == 0.0
                    ? 0.0
                    : 2.0 * pc.precision * pc.recall / (pc.precision + pc.recall);
        m.macro_precision += pc.precision;
        m.macro_recall += pc.recall;
        m.macro_f1 += pc.f1;
    }
    if (num_classes > 0) {
        m.macro_precision /= static_cast<double>(num_classes);
        m.macro_recall /= static_cast<double>(num_classes);
        m.macro_f1 /= static_cast<double>(num_classes);
    }
    return m;
}

std::string metrics_to_json(const Metrics& metrics, const std::vector<std::string>& label_names,
                            int indent) {
    nlohmann::ordered_json j;
    j["accuracy"] = metrics.accuracy;
    j["macro_precision"] = metrics.macro_precision;
    j["macro_recall"] = metrics.macro_recall;
    j["macro_f1"] = metrics.macro_f1;
    j["total"] = metrics.total;
    j["correct"] = metrics.correct;
    auto& per_class = j["per_class"] = nlohmann::ordered_json::object();
    for (size_t c = 0; c < metrics.per_class.size(); c++) {
        const auto& pc = metrics.per_class[c];
        std::string name = c < label_names.size() ? label_names[c] : std::to_string(c);
        per_class[name] = {{"tp", pc.tp},
                           {"fp", pc.fp},
                           {"fn", pc.fn},
                           {"tn", pc.tn},
                           {"precision", pc.precision},
                           {"recall", pc.recall},
                           {"f1", pc.f1}};
    }
    return j.dump(indent);
}

}  // namespace sacc
