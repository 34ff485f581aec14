#include "sacc/checkpoint.hpp"

#include <bit>
#include <cstring>
#include <fstream>

#include <json.hpp>

#include "sacc/error.hpp"

static_assert(std::endian::native == std::endian::little,
              "checkpoint I/O assumes a little-endian host");

namespace sacc {
namespace {

constexpr char kMagic[4] = {'S', 'A', 'C', 'C'};
constexpr uint32_t kFormatVersion = 1;

template <typename T>
void write_raw(std::ofstream& out, const T& value) {
    out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_raw(std::ifstream& in) {
    T value;
    in.read(reinterpret_cast<char*>(&value), sizeof(T));
    if (!in) throw Error("bad_checkpoint", "truncated checkpoint");
    return value;
}

}  // namespace

ModelParams clone_params(const ModelParams& params) {
    ModelParams copy;
    auto clone = [](const Value& t) {
        auto c = make_tensor<double>(t->rows, t->cols, t->requires_grad);
        c->data = t->data;
        return c;
    };
    copy.encoder.token_embedding = clone(params.encoder.token_embedding);
    copy.encoder.node_proj = clone(params.encoder.node_proj);
    copy.encoder.node_bias = clone(params.encoder.node_bias);
    for (const auto& layer : params.layers) {
        LayerParams lc;
        for (const auto& w : layer.wq) lc.wq.push_back(clone(w));
        for (const auto& w : layer.wk) lc.wk.push_back(clone(w));
        for (const auto& w : layer.wv) lc.wv.push_back(clone(w));
        lc.wo = clone(layer.wo);
        lc.ffn_w1 = clone(layer.ffn_w1);
        lc.ffn_b1 = clone(layer.ffn_b1);
        lc.ffn_w2 = clone(layer.ffn_w2);
        lc.ffn_b2 = clone(layer.ffn_b2);
        lc.ln1_gain = clone(layer.ln1_gain);
        lc.ln1_bias = clone(layer.ln1_bias);
        lc.ln2_gain = clone(layer.ln2_gain);
        lc.ln2_bias = clone(layer.ln2_bias);
        copy.layers.push_back(std::move(lc));
    }
    copy.out_proj = clone(params.out_proj);
    copy.out_bias = clone(params.out_bias);
    return copy;
}

void save_checkpoint(const std::string& path, const Checkpoint& checkpoint) {
    auto named = checkpoint.params.named_tensors();

    nlohmann::ordered_json header;
    header["model"] = nlohmann::ordered_json::parse(model_config_to_json(checkpoint.config));
    header["vocab"] = nlohmann::ordered_json::parse(checkpoint.vocab.to_json());
    header["labels"] = checkpoint.label_names;
    auto& manifest = header["params"] = nlohmann::ordered_json::array();
    uint64_t offset = 0;
    for (const auto& [name, tensor] : named) {
        nlohmann::ordered_json entry;
        entry["name"] = name;
        entry["shape"] = {tensor->rows, tensor->cols};
        entry["offset"] = offset;
        manifest.push_back(std::move(entry));
        offset += tensor->size();
    }
    std::string header_text = header.dump();

    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("io", "cannot write checkpoint " + path);
    out.write(kMagic, 4);
    write_raw(out, kFormatVersion);
    write_raw(out, static_cast<uint64_t>(header_text.size()));
    out.write(header_text.data(), static_cast<std::streamsize>(header_text.size()));
    for (const auto& [name, tensor] : named)
        out.write(reinterpret_cast<const char*>(tensor->data.data()),
                  static_cast<std::streamsize>(tensor->size() * sizeof(double)));
    if (!out) throw Error("io", "short write on checkpoint " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io", "cannot open checkpoint " + path);
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw Error("bad_checkpoint", "not a checkpoint file");
    uint32_t version = read_raw<uint32_t>(in);
    if (version != kFormatVersion)
        throw Error("bad_checkpoint", "unsupported format version " + std::to_string(version));
    uint64_t header_len = read_raw<uint64_t>(in);
    std::string header_text(header_len, '\0');
    in.read(header_text.data(), static_cast<std::streamsize>(header_len));
    if (!in) throw Error("bad_checkpoint", "truncated header");

    nlohmann::json header;
    try {
        header = nlohmann::json::parse(header_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error("bad_checkpoint", std::string("header parse error: ") + e.what());
    }

    Checkpoint checkpoint;
    checkpoint.config = model_config_from_json(header.at("model").dump());
    checkpoint.vocab = Vocabulary::from_json(header.at("vocab").dump());
    checkpoint.label_names = header.at("labels").get<std::vector<std::string>>();
    checkpoint.params = init_model_params<double>(checkpoint.config, checkpoint.vocab.size(), 0);

    auto named = checkpoint.params.named_tensors();
    const auto& manifest = header.at("params");
    if (manifest.size() != named.size())
        throw Error("bad_checkpoint", "parameter manifest does not match the model layout");
    for (size_t idx = 0; idx < named.size(); idx++) {
        const auto& entry = manifest[idx];
        auto& [name, tensor] = named[idx];
        if (entry.at("name").get<std::string>() != name)
            throw Error("bad_checkpoint", "unexpected parameter '" +
                                              entry.at("name").get<std::string>() + "', wanted '" +
                                              name + "'");
        auto shape = entry.at("shape").get<std::vector<size_t>>();
        if (shape.size() != 2 || shape[0] != tensor->rows || shape[1] != tensor->cols)
            throw Error("bad_checkpoint", "shape mismatch for parameter '" + name + "'");
        in.read(reinterpret_cast<char*>(tensor->data.data()),
                static_cast<std::streamsize>(tensor->size() * sizeof(double)));
        if (!in) throw Error("bad_checkpoint", "truncated parameter data");
    }
    return checkpoint;
}

}  // namespace sacc
