#include "larag/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "larag/errors.hpp"

namespace larag {
namespace {

using nlohmann::json;

const char* env(const char* name) { return std::getenv(name); }

void env_string(const char* name, std::string& out) {
    if (const char* v = env(name)) out = v;
}

void env_size(const char* name, std::size_t& out) {
    if (const char* v = env(name)) {
        try {
            out = static_cast<std::size_t>(std::stoull(v));
        } catch (const std::exception&) {
            throw ConfigError(std::string("environment variable ") + name +
                              " is not a non-negative integer: " + v);
        }
    }
}

void env_int(const char* name, int& out) {
    if (const char* v = env(name)) {
        try {
            out = std::stoi(v);
        } catch (const std::exception&) {
            throw ConfigError(std::string("environment variable ") + name +
                              " is not an integer: " + v);
        }
    }
}

void env_double(const char* name, double& out) {
    if (const char* v = env(name)) {
        try {
            out = std::stod(v);
        } catch (const std::exception&) {
            throw ConfigError(std::string("environment variable ") + name +
                              " is not a number: " + v);
        }
    }
}

template <typename T>
void read_field(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

void apply_config_file(AppConfig& config, const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }

    read_field(j, "corpus_root", config.corpus_root);
    read_field(j, "base_url_prefix", config.base_url_prefix);
    read_field(j, "index_path", config.index_path);
    read_field(j, "chunk_size", config.chunk_size);
    read_field(j, "overlap", config.overlap);
    if (j.contains("retrieval")) {
        const json& r = j.at("retrieval");
        read_field(r, "k", config.retrieval.k);
        read_field(r, "n_links", config.retrieval.n_links);
        read_field(r, "depth", config.retrieval.depth);
        read_field(r, "top_m", config.retrieval.top_m);
        if (r.contains("assembly_mode"))
            config.retrieval.assembly_mode =
                assembly_mode_from_string(r.at("assembly_mode").get<std::string>());
    }
    if (j.contains("embedder")) {
        const json& e = j.at("embedder");
        read_field(e, "kind", config.embedder.kind);
        read_field(e, "endpoint", config.embedder.endpoint);
        read_field(e, "path", config.embedder.path);
        read_field(e, "model", config.embedder.model);
        read_field(e, "api_key", config.embedder.api_key);
        read_field(e, "dimension", config.embedder.dimension);
        read_field(e, "timeout_seconds", config.embedder.timeout_seconds);
    }
    if (j.contains("generator")) {
        const json& g = j.at("generator");
        read_field(g, "kind", config.generator.kind);
        read_field(g, "endpoint", config.generator.endpoint);
        read_field(g, "path", config.generator.path);
        read_field(g, "model", config.generator.model);
        read_field(g, "api_key", config.generator.api_key);
        read_field(g, "temperature", config.generator.temperature);
        read_field(g, "timeout_seconds", config.generator.timeout_seconds);
    }
    if (j.contains("prompt_kind"))
        config.prompt_kind = prompt_kind_from_string(j.at("prompt_kind").get<std::string>());
}

void apply_env_overrides(AppConfig& config) {
    env_string("LARAG_CORPUS_ROOT", config.corpus_root);
    env_string("LARAG_BASE_URL_PREFIX", config.base_url_prefix);
    env_string("LARAG_INDEX_PATH", config.index_path);
    env_size("LARAG_CHUNK_SIZE", config.chunk_size);
    env_size("LARAG_OVERLAP", config.overlap);
    env_size("LARAG_K", config.retrieval.k);
    env_size("LARAG_N_LINKS", config.retrieval.n_links);
    env_size("LARAG_DEPTH", config.retrieval.depth);
    env_size("LARAG_TOP_M", config.retrieval.top_m);
    if (const char* v = env("LARAG_ASSEMBLY_MODE"))
        config.retrieval.assembly_mode = assembly_mode_from_string(v);
    if (const char* v = env("LARAG_PROMPT_KIND")) config.prompt_kind = prompt_kind_from_string(v);

    env_string("LARAG_EMBEDDER", config.embedder.kind);
    env_string("LARAG_EMBED_ENDPOINT", config.embedder.endpoint);
    env_string("LARAG_EMBED_PATH", config.embedder.path);
    env_string("LARAG_EMBED_MODEL", config.embedder.model);
    env_string("LARAG_EMBED_API_KEY", config.embedder.api_key);
    env_int("LARAG_EMBED_DIMENSION", config.embedder.dimension);
    env_int("LARAG_EMBED_TIMEOUT", config.embedder.timeout_seconds);

    env_string("LARAG_GENERATOR", config.generator.kind);
    env_string("LARAG_GEN_ENDPOINT", config.generator.endpoint);
    env_string("LARAG_GEN_PATH", config.generator.path);
    env_string("LARAG_GEN_MODEL", config.generator.model);
    env_string("LARAG_GEN_API_KEY", config.generator.api_key);
    env_double("LARAG_GEN_TEMPERATURE", config.generator.temperature);
    env_int("LARAG_GEN_TIMEOUT", config.generator.timeout_seconds);
}

AppConfig load_config(const std::optional<std::string>& file_path) {
    AppConfig config;
    if (file_path) apply_config_file(config, *file_path);
    apply_env_overrides(config);
    return config;
}

std::string config_to_json(const AppConfig& config) {
    json j;
    j["corpus_root"] = config.corpus_root;
    j["base_url_prefix"] = config.base_url_prefix;
    j["index_path"] = config.index_path;
    j["chunk_size"] = config.chunk_size;
    j["overlap"] = config.overlap;
    j["retrieval"] = {{"k", config.retrieval.k},
                      {"n_links", config.retrieval.n_links},
                      {"depth", config.retrieval.depth},
                      {"top_m", config.retrieval.top_m},
                      {"assembly_mode", to_string(config.retrieval.assembly_mode)}};
    j["embedder"] = {{"kind", config.embedder.kind},
                     {"endpoint", config.embedder.endpoint},
                     {"path", config.embedder.path},
                     {"model", config.embedder.model},
                     {"dimension", config.embedder.dimension},
                     {"timeout_seconds", config.embedder.timeout_seconds}};
    j["generator"] = {{"kind", config.generator.kind},
                      {"endpoint", config.generator.endpoint},
                      {"path", config.generator.path},
                      {"model", config.generator.model},
                      {"temperature", config.generator.temperature},
                      {"timeout_seconds", config.generator.timeout_seconds}};
    j["prompt_kind"] = to_string(config.prompt_kind);
    return j.dump(2) + "\n";
}

std::unique_ptr<Embedder> make_embedder(const EmbedderSpec& spec) {
    if (spec.kind == "offline") return make_offline_embedder();
    if (spec.kind == "remote") {
        if (spec.endpoint.empty())
            throw ConfigError("remote embedder needs an endpoint (embedder.endpoint)");
        RemoteEmbedderConfig rc;
        rc.endpoint = spec.endpoint;
        rc.path = spec.path;
        rc.model = spec.model;
        rc.api_key = spec.api_key;
        rc.dimension = spec.dimension;
        rc.timeout_seconds = spec.timeout_seconds;
        return std::make_unique<RemoteEmbedder>(rc);
    }
    throw ConfigError("unknown embedder kind: " + spec.kind);
}

std::unique_ptr<Generator> make_generator(const GeneratorSpec& spec) {
    if (spec.kind == "mock") return make_mock_generator();
    if (spec.kind == "remote") {
        if (spec.endpoint.empty())
            throw ConfigError("remote generator needs an endpoint (generator.endpoint)");
        RemoteGeneratorConfig rc;
        rc.endpoint = spec.endpoint;
        rc.path = spec.path;
        rc.model = spec.model;
        rc.api_key = spec.api_key;
        rc.temperature = spec.temperature;
        rc.timeout_seconds = spec.timeout_seconds;
        return std::make_unique<RemoteGenerator>(rc);
    }
    throw ConfigError("unknown generator kind: " + spec.kind);
}

}  // namespace larag
