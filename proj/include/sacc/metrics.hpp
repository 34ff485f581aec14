#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace sacc {

// One-vs-rest confusion counts per class plus accuracy and macro-averaged
// precision/recall/F1. Classes with no predicted (or no actual) positives
// contribute 0, keeping macro averages defined on tiny splits.
struct Metrics {
    struct PerClass {
        long tp = 0, fp = 0, fn = 0, tn = 0;
        double precision = 0, recall = 0, f1 = 0;
    };
    std::vector<PerClass> per_class;
    long total = 0;
    long correct = 0;
    double accuracy = 0;
    double macro_precision = 0;
    double macro_recall = 0;
    double macro_f1 = 0;
};

// predictions and truths are class indices in [0, num_classes)
Metrics compute_metrics(const std::vector<int>& predictions, const std::vector<int>& truths,
                        size_t num_classes);

std::string metrics_to_json(const Metrics& metrics, const std::vector<std::string>& label_names,
                            int indent = -1);

}  // namespace sacc
