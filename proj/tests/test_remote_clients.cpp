#include <doctest.h>

#include <atomic>
#include <cmath>
#include <memory>
#include <string>
#include <thread>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "larag/embed.hpp"
#include "larag/errors.hpp"
#include "larag/generate.hpp"

using namespace larag;
using nlohmann::json;

namespace {

// A scoped local HTTP server standing in for the hosted APIs.
class LocalServer {
public:
    explicit LocalServer(std::function<void(httplib::Server&)> setup) {
        setup(server_);
        port_ = server_.bind_to_any_port("127.0.0.1");
        thread_ = std::thread([this] { server_.listen_after_bind(); });
        server_.wait_until_ready();
    }
    ~LocalServer() {
        server_.stop();
        thread_.join();
    }
    std::string endpoint() const { return "http://127.0.0.1:" + std::to_string(port_); }

private:
    httplib::Server server_;
    int port_ = 0;
    std::thread thread_;
};

json embedding_response(std::size_t count, int dimension) {
    json data = json::array();
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<double> v(dimension, 0.0);
        v[i % dimension] = 2.0;  // deliberately non-unit, client must normalize
        data.push_back({{"embedding", v}});
    }
    return {{"data", data}};
}

}  // namespace

TEST_CASE("remote embedder batches requests and normalizes the vectors") {
    std::atomic<int> requests{0};
    std::vector<std::size_t> batch_sizes;
    LocalServer server([&](httplib::Server& s) {
        s.Post("/v1/embeddings", [&](const httplib::Request& req, httplib::Response& res) {
            ++requests;
            const json body = json::parse(req.body);
            batch_sizes.push_back(body.at("input").size());
            CHECK(body.at("model") == "test-embedder");
            CHECK(req.get_header_value("Authorization") == "Bearer sekrit");
            res.set_content(embedding_response(body.at("input").size(), 8).dump(),
                            "application/json");
        });
    });

    RemoteEmbedderConfig config;
    config.endpoint = server.endpoint();
    config.model = "test-embedder";
    config.api_key = "sekrit";
    config.max_batch = 64;
    RemoteEmbedder embedder(config);

    std::vector<std::string> texts;
    for (int i = 0; i < 130; ++i) texts.push_back("text " + std::to_string(i));
    const auto vectors = embedder.embed_batch(texts);

    REQUIRE(vectors.size() == 130);
    CHECK(requests.load() == 3);  // 64 + 64 + 2
    REQUIRE(batch_sizes.size() == 3);
    CHECK(batch_sizes[0] == 64);
    CHECK(batch_sizes[1] == 64);
    CHECK(batch_sizes[2] == 2);
    for (const auto& v : vectors) {
        double norm = 0.0;
        for (float x : v) norm += static_cast<double>(x) * x;
        CHECK(std::sqrt(norm) == doctest::Approx(1.0).epsilon(1e-6));
    }
    CHECK(embedder.dimension() == 8);
}

TEST_CASE("remote embedder retries transient failures with backoff") {
    std::atomic<int> requests{0};
    LocalServer server([&](httplib::Server& s) {
        s.Post("/v1/embeddings", [&](const httplib::Request& req, httplib::Response& res) {
            const int n = ++requests;
            if (n < 3) {
                res.status = 503;
                res.set_content("busy", "text/plain");
                return;
            }
            const json body = json::parse(req.body);
            res.set_content(embedding_response(body.at("input").size(), 4).dump(),
                            "application/json");
        });
    });

    RemoteEmbedderConfig config;
    config.endpoint = server.endpoint();
    config.model = "m";
    RemoteEmbedder embedder(config);
    const auto v = embedder.embed("hello");
    CHECK(v.size() == 4);
    CHECK(requests.load() == 3);
}

TEST_CASE("remote embedder surfaces auth failures without retrying") {
    std::atomic<int> requests{0};
    LocalServer server([&](httplib::Server& s) {
        s.Post("/v1/embeddings", [&](const httplib::Request&, httplib::Response& res) {
            ++requests;
            res.status = 401;
            res.set_content("{\"error\":\"bad key\"}", "application/json");
        });
    });

    RemoteEmbedderConfig config;
    config.endpoint = server.endpoint();
    config.model = "m";
    RemoteEmbedder embedder(config);
    CHECK_THROWS_AS(embedder.embed("hello"), TransportError);
    try {
        embedder.embed("hello");
    } catch (const TransportError& e) {
        CHECK(e.last_status() == 401);
        CHECK(e.attempts() == 1);  // 401 is not transient
    }
    CHECK(requests.load() == 2);  // one per embed call
}

TEST_CASE("remote embedder exhausts retries and reports attempts") {
    LocalServer server([&](httplib::Server& s) {
        s.Post("/v1/embeddings", [&](const httplib::Request&, httplib::Response& res) {
            res.status = 500;
        });
    });
    RemoteEmbedderConfig config;
    config.endpoint = server.endpoint();
    config.model = "m";
    config.max_retries = 2;
    RemoteEmbedder embedder(config);
    try {
        embedder.embed("hello");
        FAIL("expected TransportError");
    } catch (const TransportError& e) {
        CHECK(e.attempts() == 3);
        CHECK(e.last_status() == 500);
    }
}

TEST_CASE("remote generator prefers provider-reported usage") {
    LocalServer server([&](httplib::Server& s) {
        s.Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
            const json body = json::parse(req.body);
            CHECK(body.at("temperature") == 0.0);
            CHECK(body.at("messages").at(0).at("role") == "user");
            const json reply = {
                {"choices", {{{"message", {{"role", "assistant"}, {"content", "The answer."}}}}}},
                {"usage",
                 {{"prompt_tokens", 123}, {"completion_tokens", 7}, {"total_tokens", 130}}}};
            res.set_content(reply.dump(), "application/json");
        });
    });

    RemoteGeneratorConfig config;
    config.endpoint = server.endpoint();
    config.model = "test-model";
    RemoteGenerator generator(config);
    const auto result = generator.generate("Why?");
    CHECK(result.answer == "The answer.");
    CHECK(result.prompt_tokens == 123);
    CHECK(result.completion_tokens == 7);
    CHECK(result.total_tokens == 130);
    CHECK(!result.tokens_estimated);
    CHECK(result.latency_seconds > 0.0);
}

TEST_CASE("remote generator falls back to estimated counts and flags them") {
    LocalServer server([&](httplib::Server& s) {
        s.Post("/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
            const json reply = {
                {"choices",
                 {{{"message", {{"role", "assistant"}, {"content", "I cannot help with that."}}}}}}};
            res.set_content(reply.dump(), "application/json");
        });
    });

    RemoteGeneratorConfig config;
    config.endpoint = server.endpoint();
    config.model = "m";
    RemoteGenerator generator(config);
    const auto result = generator.generate("Q12345678");  // 9 bytes
    // Refusal content passes through verbatim.
    CHECK(result.answer == "I cannot help with that.");
    CHECK(result.tokens_estimated);
    CHECK(result.prompt_tokens == count_tokens("Q12345678"));
    CHECK(result.completion_tokens == count_tokens(result.answer));
    CHECK(result.total_tokens == result.prompt_tokens + result.completion_tokens);
}
