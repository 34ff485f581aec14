#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace sacc {

// Node-token vocabulary. Ids are contiguous: 0 = PAD, 1 = UNK, then tokens
// by descending corpus frequency (ties broken lexicographically). Lookup of
// an unknown token returns UNK.
class Vocabulary {
public:
    static constexpr int kPad = 0;
    static constexpr int kUnk = 1;

    Vocabulary() = default;

    int lookup(const std::string& token) const {
        auto it = token_to_id_.find(token);
        return it == token_to_id_.end() ? kUnk : it->second;
    }
    bool contains(const std::string& token) const { return token_to_id_.count(token) > 0; }

    size_t size() const { return id_to_token_.size(); }
    const std::vector<std::string>& tokens() const { return id_to_token_; }

    void insert(const std::string& token);

    std::string to_json(int indent = -1) const;
    static Vocabulary from_json(const std::string& text);

private:
    std::unordered_map<std::string, int> token_to_id_;
    std::vector<std::string> id_to_token_;
};

// Tokens with frequency >= min_freq get ids from 2 upward, ordered by
// (descending frequency, lexicographic). Throws Error("empty_corpus") when
// the corpus has no token lists.
Vocabulary build_vocab(const std::vector<std::vector<std::string>>& corpus, int min_freq);

}  // namespace sacc
