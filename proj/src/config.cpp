#include "sacc/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sacc/error.hpp"

namespace sacc {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

void apply_patterns(ModelConfig& model, const json& value) {
    model.pattern_local = model.pattern_global = model.pattern_ast = false;
    model.pattern_dilated = model.pattern_random = false;
    for (const auto& item : value) {
        std::string name = item.get<std::string>();
        if (name == "local")
            model.pattern_local = true;
        else if (name == "global")
            model.pattern_global = true;
        else if (name == "ast")
            model.pattern_ast = true;
        else if (name == "dilated")
            model.pattern_dilated = true;
        else if (name == "random")
            model.pattern_random = true;
        else
            throw Error("bad_config", "unknown pattern '" + name + "'");
    }
}

json patterns_json(const ModelConfig& model) {
    json list = json::array();
    if (model.pattern_local) list.push_back("local");
    if (model.pattern_global) list.push_back("global");
    if (model.pattern_ast) list.push_back("ast");
    if (model.pattern_dilated) list.push_back("dilated");
    if (model.pattern_random) list.push_back("random");
    return list;
}

void apply_key(RunConfig& config, const std::string& key, const json& value) {
    auto& m = config.model;
    auto& t = config.train;
    try {
        if (key == "d_model")
            m.d_model = value.get<int>();
        else if (key == "layers")
            m.layers = value.get<int>();
        else if (key == "heads")
            m.heads = value.get<int>();
        else if (key == "d_k")
            m.d_k = value.get<int>();
        else if (key == "d_v")
            m.d_v = value.get<int>();
        else if (key == "d_ff")
            m.d_ff = value.get<int>();
        else if (key == "window")
            m.window = value.get<int>();
        else if (key == "global_size")
            m.global_size = value.get<int>();
        else if (key == "global_indices")
            m.global_indices = value.get<std::vector<size_t>>();
        else if (key == "patterns")
            apply_patterns(m, value);
        else if (key == "dilated_gap")
            m.dilated_gap = value.get<int>();
        else if (key == "random_per_row")
            m.random_per_row = value.get<int>();
        else if (key == "num_classes")
            m.num_classes = value.get<int>();
        else if (key == "pooling")
            m.pooling = value.get<std::string>();
        else if (key == "local_strict")
            m.local_strict = value.get<bool>();
        else if (key == "adj_closure")
            m.adj_closure = value.get<bool>();
        else if (key == "min_freq")
            m.min_freq = value.get<int>();
        else if (key == "epochs")
            t.epochs = value.get<int>();
        else if (key == "batch_size")
            t.batch_size = value.get<int>();
        else if (key == "lr")
            t.lr = value.get<double>();
        else if (key == "beta1")
            t.beta1 = value.get<double>();
        else if (key == "beta2")
            t.beta2 = value.get<double>();
        else if (key == "eps")
            t.eps = value.get<double>();
        else if (key == "seed")
            t.seed = value.get<uint64_t>();
        else if (key == "shuffle")
            t.shuffle = value.get<bool>();
        else
            throw Error("bad_config", "unknown config key '" + key + "'");
    } catch (const json::exception& e) {
        throw Error("bad_config", "config key '" + key + "': " + e.what());
    }
}

}  // namespace

void TrainConfig::validate() const {
    auto check = [](bool ok, const std::string& message) {
        if (!ok) throw Error("bad_config", message);
    };
    check(epochs >= 1, "epochs must be >= 1");
    check(batch_size >= 1, "batch_size must be >= 1");
    check(lr > 0, "lr must be positive");
    check(beta1 >= 0 && beta1 < 1 && beta2 >= 0 && beta2 < 1, "betas must lie in [0,1)");
    check(eps > 0, "eps must be positive");
}

RunConfig load_run_config(const std::string& config_path,
                          const std::vector<std::string>& overrides) {
    RunConfig config;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw Error("io", "cannot open config " + config_path);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw Error("bad_config", std::string("config parse error: ") + e.what());
        }
        for (auto it = j.begin(); it != j.end(); ++it) apply_key(config, it.key(), it.value());
    }
    for (const auto& assignment : overrides) {
        size_t eq = assignment.find('=');
        if (eq == std::string::npos)
            throw Error("bad_config", "--set expects key=value, got '" + assignment + "'");
        std::string key = assignment.substr(0, eq);
        std::string raw = assignment.substr(eq + 1);
        json value;
        try {
            value = json::parse(raw);
        } catch (const json::exception&) {
            if (key == "patterns") {
                // bare comma list: local,ast
                value = json::array();
                std::stringstream ss(raw);
                std::string part;
                while (std::getline(ss, part, ','))
                    if (!part.empty()) value.push_back(part);
            } else {
                value = raw;  // unquoted string
            }
        }
        apply_key(config, key, value);
    }
    config.model.validate();
    config.train.validate();
    return config;
}

std::string model_config_to_json(const ModelConfig& config, int indent) {
    ordered_json j;
    j["d_model"] = config.d_model;
    j["layers"] = config.layers;
    j["heads"] = config.heads;
    j["d_k"] = config.d_k;
    j["d_v"] = config.d_v;
    j["d_ff"] = config.d_ff;
    j["window"] = config.window;
    j["global_size"] = config.global_size;
    j["global_indices"] = config.global_indices;
    j["patterns"] = patterns_json(config);
    j["dilated_gap"] = config.dilated_gap;
    j["random_per_row"] = config.random_per_row;
    j["num_classes"] = config.num_classes;
    j["pooling"] = config.pooling;
    j["local_strict"] = config.local_strict;
    j["adj_closure"] = config.adj_closure;
    j["min_freq"] = config.min_freq;
    return j.dump(indent);
}

ModelConfig model_config_from_json(const std::string& text) {
    RunConfig config;
    json j = json::parse(text);
    for (auto it = j.begin(); it != j.end(); ++it) apply_key(config, it.key(), it.value());
    config.model.validate();
    return config.model;
}

}  // namespace sacc
