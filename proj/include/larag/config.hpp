#pragma once

#include <memory>
#include <optional>
#include <string>

#include "larag/embed.hpp"
#include "larag/generate.hpp"
#include "larag/prompt.hpp"
#include "larag/retrieval.hpp"

namespace larag {

struct EmbedderSpec {
    std::string kind = "offline";  // offline | remote
    std::string endpoint;
    std::string path = "/v1/embeddings";
    std::string model;
    std::string api_key;
    int dimension = 0;
    int timeout_seconds = 30;
};

struct GeneratorSpec {
    std::string kind = "mock";  // mock | remote
    std::string endpoint;
    std::string path = "/v1/chat/completions";
    std::string model;
    std::string api_key;
    double temperature = 0.0;
    int timeout_seconds = 30;
};

// Everything the CLI needs to run the pipeline. Defaults follow the usual
// operating point: 1000/150 chunking and k=5 with the (1,1,1) triple.
struct AppConfig {
    std::string corpus_root = "corpus";
    std::string base_url_prefix = "https://docs.meridian.example/";
    std::string index_path = "index.ndjson";
    std::size_t chunk_size = 1000;
    std::size_t overlap = 150;
    RetrievalConfig retrieval;  // k=5, (1,1,1), augment
    EmbedderSpec embedder;
    GeneratorSpec generator;
    PromptKind prompt_kind = PromptKind::kBasic;
};

// Layered configuration: defaults, then the JSON config file (when given),
// then LARAG_* environment variables. Command-line flags are applied on top
// by the CLI, so precedence is flag > environment > file > default.
AppConfig load_config(const std::optional<std::string>& file_path);
void apply_config_file(AppConfig& config, const std::string& path);
void apply_env_overrides(AppConfig& config);

std::string config_to_json(const AppConfig& config);

std::unique_ptr<Embedder> make_embedder(const EmbedderSpec& spec);
std::unique_ptr<Generator> make_generator(const GeneratorSpec& spec);

}  // namespace larag
