#include "sacc/dataset.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "sacc/error.hpp"
#include "sacc/parser.hpp"
#include "sacc/rng.hpp"

namespace fs = std::filesystem;

namespace sacc {
namespace {

struct RawEntry {
    std::string path;
    std::string label;
    std::string split;  // "", "train", "val", "test"
};

std::vector<RawEntry> read_manifest(const std::string& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw Error("manifest_not_found", "cannot open manifest " + manifest_path);
    fs::path base = fs::path(manifest_path).parent_path();
    std::vector<RawEntry> entries;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw Error("bad_manifest", "manifest line " + std::to_string(line_no) + ": " + e.what(),
                        line_no);
        }
        RawEntry entry;
        entry.path = (base / j.at("path").get<std::string>()).string();
        entry.label = j.at("label").get<std::string>();
        if (j.contains("split")) entry.split = j.at("split").get<std::string>();
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<RawEntry> scan_directory(const std::string& root) {
    std::vector<RawEntry> entries;
    std::vector<fs::path> label_dirs;
    for (const auto& item : fs::directory_iterator(root))
        if (item.is_directory()) label_dirs.push_back(item.path());
    std::sort(label_dirs.begin(), label_dirs.end());
    for (const auto& dir : label_dirs) {
        std::vector<fs::path> files;
        for (const auto& item : fs::directory_iterator(dir))
            if (item.is_regular_file()) files.push_back(item.path());
        std::sort(files.begin(), files.end());
        for (const auto& file : files)
            entries.push_back({file.string(), dir.filename().string(), ""});
    }
    return entries;
}

Split parse_split(const std::string& name) {
    if (name == "train") return Split::kTrain;
    if (name == "val") return Split::kVal;
    if (name == "test") return Split::kTest;
    throw Error("bad_manifest", "unknown split name '" + name + "'");
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<size_t> Dataset::indices_of(Split split) const {
    std::vector<size_t> out;
    for (size_t i = 0; i < samples.size(); i++)
        if (samples[i].split == split) out.push_back(i);
    return out;
}

Dataset ingest(const std::string& manifest_path, uint64_t seed) {
    std::vector<RawEntry> entries;
    if (fs::is_directory(manifest_path))
        entries = scan_directory(manifest_path);
    else
        entries = read_manifest(manifest_path);

    Dataset dataset;
    std::map<std::string, int> label_ids;
    for (const auto& entry : entries) label_ids[entry.label] = 0;  // collect names
    for (auto& [name, id] : label_ids) {
        id = static_cast<int>(dataset.label_names.size());
        dataset.label_names.push_back(name);
    }

    bool any_split_field = false;
    for (const auto& entry : entries) {
        try {
            Sample sample;
            sample.id = entry.path;
            sample.seq = split(parse_source(read_file(entry.path)));
            sample.label = label_ids.at(entry.label);
            if (!entry.split.empty()) {
                sample.split = parse_split(entry.split);
                any_split_field = true;
            }
            dataset.samples.push_back(std::move(sample));
        } catch (const Error& e) {
            dataset.failures.push_back({entry.path, std::string(e.kind()) + ": " + e.what()});
        }
    }
    if (dataset.samples.empty())
        throw Error("all_samples_failed",
                    "no sample parsed successfully (" + std::to_string(dataset.failures.size()) +
                        " failures)");

    if (!any_split_field) {
        // 60/20/20 by seeded shuffle
        std::vector<size_t> order(dataset.samples.size());
        for (size_t i = 0; i < order.size(); i++) order[i] = i;
        Rng rng = Rng::derive(seed, 0xD5);
        rng.shuffle(order);
        size_t n = order.size();
        size_t n_train = (n * 6) / 10;
        size_t n_val = (n * 2) / 10;
        if (n_train == 0) n_train = n;  // tiny datasets stay trainable
        for (size_t pos = 0; pos < n; pos++) {
            Split s = pos < n_train           ? Split::kTrain
                      : pos < n_train + n_val ? Split::kVal
                                              : Split::kTest;
            dataset.samples[order[pos]].split = s;
        }
    }
    return dataset;
}

std::vector<std::vector<std::string>> token_corpus(const Dataset& dataset,
                                                   const std::vector<size_t>& sample_indices) {
    std::vector<std::vector<std::string>> corpus;
    for (size_t idx : sample_indices)
        for (const auto& tree : dataset.samples[idx].seq.trees)
            corpus.push_back(tree_tokens(tree));
    return corpus;
}

}  // namespace sacc
