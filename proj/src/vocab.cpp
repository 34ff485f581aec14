#include "sacc/vocab.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "sacc/error.hpp"

namespace sacc {

void Vocabulary::insert(const std::string& token) {
    if (id_to_token_.empty()) {
        id_to_token_ = {"<pad>", "<unk>"};
        token_to_id_ = {{"<pad>", kPad}, {"<unk>", kUnk}};
    }
    if (token_to_id_.count(token)) return;
    token_to_id_[token] = static_cast<int>(id_to_token_.size());
    id_to_token_.push_back(token);
}

std::string Vocabulary::to_json(int indent) const {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (size_t id = 0; id < id_to_token_.size(); id++) j[id_to_token_[id]] = id;
    return j.dump(indent);
}

Vocabulary Vocabulary::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<std::string> by_id(j.size());
    for (auto it = j.begin(); it != j.end(); ++it) {
        size_t id = it.value().get<size_t>();
        if (id >= by_id.size()) throw Error("bad_checkpoint", "vocabulary ids not contiguous");
        by_id[id] = it.key();
    }
    Vocabulary vocab;
    for (const auto& token : by_id) vocab.insert(token);
    return vocab;
}

Vocabulary build_vocab(const std::vector<std::vector<std::string>>& corpus, int min_freq) {
    if (corpus.empty()) throw Error("empty_corpus", "vocabulary corpus is empty");
    std::map<std::string, long> freq;
    for (const auto& tokens : corpus)
        for (const auto& token : tokens) freq[token]++;

    std::vector<std::pair<std::string, long>> entries(freq.begin(), freq.end());
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    Vocabulary vocab;
    vocab.insert("<pad>");  // also seeds UNK
    for (const auto& [token, count] : entries)
        if (count >= min_freq) vocab.insert(token);
    return vocab;
}

}  // namespace sacc
