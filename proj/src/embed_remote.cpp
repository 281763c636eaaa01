#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "larag/embed.hpp"
#include "larag/errors.hpp"
#include "remote_common.hpp"

namespace larag {
namespace {

void normalize_unit(EmbeddingVector& v) {
    double norm_sq = 0.0;
    for (float x : v) norm_sq += static_cast<double>(x) * static_cast<double>(x);
    if (norm_sq == 0.0) throw TransportError("embeddings API returned a zero vector", 1, 200);
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (float& x : v) x = static_cast<float>(x * inv);
}

}  // namespace

RemoteEmbedder::RemoteEmbedder(RemoteEmbedderConfig config)
    : config_(std::move(config)), dimension_(config_.dimension) {}

std::string RemoteEmbedder::id() const { return "remote:" + config_.model; }

EmbeddingVector RemoteEmbedder::embed(const std::string& text) {
    return embed_batch({text}).front();
}

std::vector<EmbeddingVector> RemoteEmbedder::embed_batch(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (std::size_t offset = 0; offset < texts.size();
         offset += static_cast<std::size_t>(config_.max_batch)) {
        const std::size_t count =
            std::min<std::size_t>(config_.max_batch, texts.size() - offset);
        nlohmann::json request;
        request["model"] = config_.model;
        request["input"] = nlohmann::json::array();
        for (std::size_t i = 0; i < count; ++i) {
            const std::string& t = texts[offset + i];
            if (t.find_first_not_of(" \t\r\n") == std::string::npos)
                throw std::invalid_argument("embed: text is empty after trimming");
            request["input"].push_back(t);
        }
        const std::string body =
            detail::post_json_with_retries(config_.endpoint, config_.path, config_.api_key,
                                           config_.timeout_seconds, config_.max_retries,
                                           request.dump());
        nlohmann::json response;
        try {
            response = nlohmann::json::parse(body);
        } catch (const nlohmann::json::exception& e) {
            throw TransportError(std::string("embeddings API returned malformed JSON: ") + e.what(),
                                 1, 200);
        }
        if (!response.contains("data") || !response["data"].is_array() ||
            response["data"].size() != count)
            throw TransportError("embeddings API response has wrong shape (expected " +
                                     std::to_string(count) + " vectors)",
                                 1, 200);
        for (const auto& item : response["data"]) {
            EmbeddingVector v = item.at("embedding").get<EmbeddingVector>();
            int expected = 0;
            dimension_.compare_exchange_strong(expected, static_cast<int>(v.size()));
            if (static_cast<int>(v.size()) != dimension_.load())
                throw TransportError("embeddings API dimension changed mid-stream (" +
                                         std::to_string(v.size()) + " vs " +
                                         std::to_string(dimension_.load()) + ")",
                                     1, 200);
            normalize_unit(v);
            out.push_back(std::move(v));
        }
    }
    return out;
}

}  // namespace larag
