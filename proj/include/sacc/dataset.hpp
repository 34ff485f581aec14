#pragma once

#include <string>
#include <vector>

#include "sacc/treesplit.hpp"

namespace sacc {

enum class Split { kTrain, kVal, kTest };

struct Sample {
    std::string id;  // source path
    StatementSequence seq;
    int label = 0;
    Split split = Split::kTrain;
};

struct IngestFailure {
    std::string path;
    std::string error;
};

struct Dataset {
    std::vector<Sample> samples;
    std::vector<std::string> label_names;  // sorted; index = label id
    std::vector<IngestFailure> failures;

    std::vector<size_t> indices_of(Split split) const;
    size_t num_classes() const { return label_names.size(); }
};

// Reads a JSON-lines manifest ({"path":..., "label":..., "split"?:...} per
// line, paths relative to the manifest) or a directory with one subdirectory
// per label. Files that fail to parse or split are excluded and reported.
// Samples without a split field are assigned 60/20/20 by seeded shuffle.
Dataset ingest(const std::string& manifest_path, uint64_t seed);

// token lists of every statement tree across the given samples
std::vector<std::vector<std::string>> token_corpus(const Dataset& dataset,
                                                   const std::vector<size_t>& sample_indices);

std::string read_file(const std::string& path);

}  // namespace sacc
