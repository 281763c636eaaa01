#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "larag/cli.hpp"

namespace fs = std::filesystem;

namespace {

int run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv;
    argv.push_back("larag");
    for (const auto& a : args) argv.push_back(a.c_str());
    return larag::cli::run(static_cast<int>(argv.size()), argv.data());
}

struct CoutCapture {
    std::ostringstream buffer;
    std::streambuf* old;
    CoutCapture() : old(std::cout.rdbuf(buffer.rdbuf())) {}
    ~CoutCapture() { std::cout.rdbuf(old); }
    std::string text() const { return buffer.str(); }
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE_MESSAGE(in.good(), "cannot read ", path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// One workspace shared by the ordered CLI cases below.
const fs::path& workspace() {
    static const fs::path dir = [] {
        const fs::path d = fs::temp_directory_path() / "larag_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string ws(const std::string& rel) { return (workspace() / rel).string(); }

}  // namespace

TEST_CASE("cli: seed-corpus materializes pages, suite, and sample config") {
    CoutCapture capture;
    REQUIRE(run_cli({"seed-corpus", "--out", ws("demo")}) == 0);
    CHECK(fs::exists(ws("demo/corpus/index.html")));
    CHECK(fs::exists(ws("demo/corpus/flow/import-files.html")));
    CHECK(fs::exists(ws("demo/benchmark.ndjson")));
    CHECK(fs::exists(ws("demo/larag.json")));

    std::size_t pages = 0;
    for (const auto& entry : fs::recursive_directory_iterator(ws("demo/corpus")))
        if (entry.is_regular_file() && entry.path().extension() == ".html") ++pages;
    CHECK(pages >= 20);

    std::ifstream suite(ws("demo/benchmark.ndjson"));
    std::size_t cases = 0;
    std::string line;
    while (std::getline(suite, line))
        if (!line.empty()) ++cases;
    CHECK(cases == 20);
}

TEST_CASE("cli: ingest builds a deterministic index and a warnings sidecar") {
    {
        CoutCapture capture;
        REQUIRE(run_cli({"--config-file", ws("demo/larag.json"), "ingest"}) == 0);
        CHECK(capture.text().find("chunks=") != std::string::npos);
    }
    REQUIRE(fs::exists(ws("demo/index.ndjson")));
    REQUIRE(fs::exists(ws("demo/index.ndjson.warnings.ndjson")));
    const std::string first = slurp(ws("demo/index.ndjson"));

    // The mailto link in the corpus must surface as a warning record.
    const std::string warnings = slurp(ws("demo/index.ndjson.warnings.ndjson"));
    CHECK(warnings.find("mailto:licensing@meridian.example") != std::string::npos);
    const auto record = nlohmann::json::parse(warnings.substr(0, warnings.find('\n')));
    CHECK(record.contains("href"));
    CHECK(record.contains("base"));
    CHECK(record.contains("reason"));

    {
        CoutCapture capture;
        REQUIRE(run_cli({"--config-file", ws("demo/larag.json"), "ingest"}) == 0);
    }
    CHECK(slurp(ws("demo/index.ndjson")) == first);  // byte-identical rerun
}

TEST_CASE("cli: expansion shows in the query trace only when enabled") {
    const std::string question =
        "Provide instructions for installing the platform and its prerequisites";
    CoutCapture flat_capture;
    REQUIRE(run_cli({"--config-file", ws("demo/larag.json"), "query", "-q", question,
                     "--config", "0,0,0"}) == 0);
    const std::string flat = flat_capture.text();

    CoutCapture linked_capture;
    REQUIRE(run_cli({"--config-file", ws("demo/larag.json"), "query", "-q", question,
                     "--config", "1,1,1"}) == 0);
    const std::string linked = linked_capture.text();

    CHECK(flat.find("seed     ") != std::string::npos);
    CHECK(flat.find("expanded ") == std::string::npos);
    CHECK(linked.find("expanded ") != std::string::npos);
    CHECK(linked.find(" via ") != std::string::npos);
}

TEST_CASE("cli: bench writes a stable records CSV and report consumes it") {
    const std::vector<std::string> bench_args = {
        "--config-file", ws("demo/larag.json"),
        "bench",         "--suite",
        ws("demo/benchmark.ndjson"),  "--out",
        ws("records.csv"),            "--kinds",
        "basic",         "hyperlinked",
        "--configs",     "2:0,0,0",
        "2:1,1,1"};
    {
        CoutCapture capture;
        REQUIRE(run_cli(bench_args) == 0);
        CHECK(capture.text().find("records=80") != std::string::npos);
    }
    const std::string first = slurp(ws("records.csv"));
    CHECK(first.rfind("# larag.records.v1", 0) == 0);
    {
        CoutCapture capture;
        REQUIRE(run_cli(bench_args) == 0);
    }
    CHECK(slurp(ws("records.csv")) == first);  // byte-identical with mock components
    CHECK(fs::exists(ws("records.csv.log")));  // timestamps live in the sidecar

    CoutCapture report_capture;
    REQUIRE(run_cli({"report", "--records", ws("records.csv")}) == 0);
    const std::string report = report_capture.text();
    CHECK(report.find("k2-(0,0,0)") != std::string::npos);
    CHECK(report.find("k2-(1,1,1)") != std::string::npos);
    CHECK(report.find("Per-prompt means") != std::string::npos);
}

TEST_CASE("cli: report fails loudly on an empty records file") {
    {
        std::ofstream out(ws("empty.csv"), std::ios::binary);
        out << "";
    }
    CHECK(run_cli({"report", "--records", ws("empty.csv")}) != 0);
    CHECK(run_cli({"report", "--records", ws("does-not-exist.csv")}) != 0);
}

TEST_CASE("cli: inspect dumps one chunk's metadata as JSON") {
    CoutCapture capture;
    const std::string id = "https://docs.meridian.example/install.html:installing-meridian-0";
    REQUIRE(run_cli({"--config-file", ws("demo/larag.json"), "inspect", "--id", id}) == 0);
    const auto j = nlohmann::json::parse(capture.text());
    CHECK(j.at("id") == id);
    CHECK(j.at("anchor_name") == "installing-meridian");
    CHECK(j.at("links").is_array());
    CHECK(!j.at("links").empty());
    CHECK(j.at("links").size() == j.at("links_context").size());

    CHECK(run_cli({"--config-file", ws("demo/larag.json"), "inspect", "--id", "nope"}) != 0);
}

TEST_CASE("cli: flags beat environment values") {
    setenv("LARAG_CHUNK_SIZE", "500", 1);
    CoutCapture capture;
    REQUIRE(run_cli({"--config-file", ws("demo/larag.json"), "ingest", "--chunk-size", "250",
                     "--index", ws("small.ndjson")}) == 0);
    unsetenv("LARAG_CHUNK_SIZE");
    // A 250-char budget forces far more chunks than the default run had.
    const std::string out = capture.text();
    const std::size_t at = out.find("chunks=");
    REQUIRE(at != std::string::npos);
    const std::size_t chunks = std::stoull(out.substr(at + 7));
    CHECK(chunks > 60);

    // And the env value is honoured when no flag is given.
    setenv("LARAG_CHUNK_SIZE", "250", 1);
    CoutCapture env_capture;
    REQUIRE(run_cli({"--config-file", ws("demo/larag.json"), "ingest", "--index",
                     ws("small2.ndjson")}) == 0);
    unsetenv("LARAG_CHUNK_SIZE");
    const std::string env_out = env_capture.text();
    const std::size_t env_at = env_out.find("chunks=");
    REQUIRE(env_at != std::string::npos);
    CHECK(std::stoull(env_out.substr(env_at + 7)) == chunks);
}

TEST_CASE("cli: unknown subcommands and bad triples fail with nonzero status") {
    CHECK(run_cli({"frobnicate"}) != 0);
    CHECK(run_cli({"--config-file", ws("demo/larag.json"), "query", "-q", "x", "--config",
                   "1,2"}) != 0);
}

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <thread>

TEST_CASE("cli: remote embedder and generator drive the whole pipeline") {
    httplib::Server server;
    server.Post("/v1/embeddings", [](const httplib::Request& req, httplib::Response& res) {
        const auto body = nlohmann::json::parse(req.body);
        nlohmann::json data = nlohmann::json::array();
        for (const auto& text : body.at("input")) {
            // Deterministic per-text vector derived from byte content.
            const std::string t = text.get<std::string>();
            std::vector<double> v(6, 0.0);
            for (std::size_t i = 0; i < t.size(); ++i)
                v[i % 6] += static_cast<double>(static_cast<unsigned char>(t[i])) / 255.0;
            data.push_back({{"embedding", v}});
        }
        res.set_content(nlohmann::json{{"data", data}}.dump(), "application/json");
    });
    server.Post("/v1/chat/completions", [](const httplib::Request&, httplib::Response& res) {
        const nlohmann::json reply = {
            {"choices",
             {{{"message", {{"role", "assistant"}, {"content", "Remote answer text."}}}}}},
            {"usage", {{"prompt_tokens", 42}, {"completion_tokens", 4}, {"total_tokens", 46}}}};
        res.set_content(reply.dump(), "application/json");
    });
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread listener([&] { server.listen_after_bind(); });
    server.wait_until_ready();
    const std::string endpoint = "http://127.0.0.1:" + std::to_string(port);

    {
        CoutCapture capture;
        REQUIRE(run_cli({"ingest", "--corpus-root", ws("demo/corpus"), "--base-url",
                         "https://docs.meridian.example/", "--index", ws("remote.ndjson"),
                         "--embedder", "remote", "--embed-endpoint", endpoint, "--embed-model",
                         "fake-embedder"}) == 0);
    }
    CHECK(fs::exists(ws("remote.ndjson")));

    CoutCapture capture;
    REQUIRE(run_cli({"query", "-q", "How do imports work?", "--index", ws("remote.ndjson"),
                     "--embedder", "remote", "--embed-endpoint", endpoint, "--embed-model",
                     "fake-embedder", "--generator", "remote", "--gen-endpoint", endpoint,
                     "--gen-model", "fake-model", "--config", "1,1,1"}) == 0);
    const std::string out = capture.text();
    CHECK(out.rfind("Remote answer text.", 0) == 0);
    CHECK(out.find("46 tokens") != std::string::npos);
    CHECK(out.find("(estimated)") == std::string::npos);  // provider usage was reported

    // The index remembers which embedder built it.
    CHECK(run_cli({"query", "-q", "x", "--index", ws("remote.ndjson"), "--embedder",
                   "offline"}) != 0);
    CHECK(run_cli({"inspect", "--id", "whatever", "--index", ws("remote.ndjson"), "--embedder",
                   "remote", "--embed-endpoint", endpoint, "--embed-model", "other-model"}) != 0);

    server.stop();
    listener.join();
}
