#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "larag/config.hpp"
#include "larag/errors.hpp"

using namespace larag;

namespace {

// Scoped environment variable; restores the previous state on destruction.
class EnvVar {
public:
    EnvVar(std::string name, const std::string& value) : name_(std::move(name)) {
        if (const char* old = std::getenv(name_.c_str())) old_ = old;
        setenv(name_.c_str(), value.c_str(), 1);
    }
    ~EnvVar() {
        if (old_)
            setenv(name_.c_str(), old_->c_str(), 1);
        else
            unsetenv(name_.c_str());
    }

private:
    std::string name_;
    std::optional<std::string> old_;
};

struct TempConfigFile {
    std::string path;
    explicit TempConfigFile(const std::string& content) {
        path = (std::filesystem::temp_directory_path() / "larag_test_config.json").string();
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempConfigFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("defaults follow the documented operating point") {
    const AppConfig config = load_config(std::nullopt);
    CHECK(config.chunk_size == 1000);
    CHECK(config.overlap == 150);
    CHECK(config.retrieval.k == 5);
    CHECK(config.retrieval.n_links == 1);
    CHECK(config.retrieval.depth == 1);
    CHECK(config.retrieval.top_m == 1);
    CHECK(config.retrieval.assembly_mode == AssemblyMode::kAugment);
    CHECK(config.embedder.kind == "offline");
    CHECK(config.generator.kind == "mock");
    CHECK(config.embedder.timeout_seconds == 30);
}

TEST_CASE("the config file overrides defaults field by field") {
    TempConfigFile file(R"({
        "chunk_size": 800,
        "overlap": 100,
        "retrieval": {"k": 10, "n_links": 2, "assembly_mode": "rerank_truncate"},
        "embedder": {"kind": "remote", "endpoint": "http://127.0.0.1:9", "model": "m"},
        "prompt_kind": "reasoning"
    })");
    const AppConfig config = load_config(file.path);
    CHECK(config.chunk_size == 800);
    CHECK(config.overlap == 100);
    CHECK(config.retrieval.k == 10);
    CHECK(config.retrieval.n_links == 2);
    CHECK(config.retrieval.depth == 1);  // untouched fields keep defaults
    CHECK(config.retrieval.assembly_mode == AssemblyMode::kRerankTruncate);
    CHECK(config.embedder.kind == "remote");
    CHECK(config.embedder.model == "m");
    CHECK(config.prompt_kind == PromptKind::kReasoning);
}

TEST_CASE("environment variables override the config file") {
    TempConfigFile file(R"({"chunk_size": 800, "index_path": "from_file.ndjson"})");
    EnvVar chunk("LARAG_CHUNK_SIZE", "600");
    EnvVar k("LARAG_K", "7");
    EnvVar key("LARAG_EMBED_API_KEY", "env-secret");
    const AppConfig config = load_config(file.path);
    CHECK(config.chunk_size == 600);           // env beats file
    CHECK(config.index_path == "from_file.ndjson");  // file beats default
    CHECK(config.retrieval.k == 7);            // env beats default
    CHECK(config.embedder.api_key == "env-secret");
}

TEST_CASE("every retrieval field has an environment override") {
    EnvVar n("LARAG_N_LINKS", "3");
    EnvVar d("LARAG_DEPTH", "2");
    EnvVar m("LARAG_TOP_M", "4");
    EnvVar mode("LARAG_ASSEMBLY_MODE", "rerank_truncate");
    EnvVar kind("LARAG_PROMPT_KIND", "hyperlinked");
    const AppConfig config = load_config(std::nullopt);
    CHECK(config.retrieval.n_links == 3);
    CHECK(config.retrieval.depth == 2);
    CHECK(config.retrieval.top_m == 4);
    CHECK(config.retrieval.assembly_mode == AssemblyMode::kRerankTruncate);
    CHECK(config.prompt_kind == PromptKind::kHyperlinked);
}

TEST_CASE("bad config input fails with a clear error") {
    TempConfigFile file("{ not json");
    CHECK_THROWS_AS(load_config(file.path), ConfigError);
    CHECK_THROWS_AS(load_config(std::string("/no/such/config.json")), ConfigError);
    EnvVar bad("LARAG_CHUNK_SIZE", "not-a-number");
    CHECK_THROWS_AS(load_config(std::nullopt), ConfigError);
}

TEST_CASE("config round-trips through its JSON rendering") {
    AppConfig config;
    config.chunk_size = 777;
    config.retrieval.k = 9;
    config.prompt_kind = PromptKind::kUnified;
    TempConfigFile file(config_to_json(config));
    const AppConfig loaded = load_config(file.path);
    CHECK(loaded.chunk_size == 777);
    CHECK(loaded.retrieval.k == 9);
    CHECK(loaded.prompt_kind == PromptKind::kUnified);
}

TEST_CASE("factories reject unknown kinds and missing endpoints") {
    EmbedderSpec embedder;
    embedder.kind = "nonsense";
    CHECK_THROWS_AS(make_embedder(embedder), ConfigError);
    embedder.kind = "remote";
    embedder.endpoint = "";
    CHECK_THROWS_AS(make_embedder(embedder), ConfigError);

    GeneratorSpec generator;
    generator.kind = "remote";
    CHECK_THROWS_AS(make_generator(generator), ConfigError);
    generator.kind = "mock";
    CHECK(make_generator(generator) != nullptr);
}
